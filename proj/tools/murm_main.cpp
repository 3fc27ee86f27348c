// Batch CLI for the murmuration pipeline.  Subcommands are wired up as the
// corresponding library modules land.
#include <cstdio>

#include "CLI11.hpp"

#include "murm/curves.hpp"

int main(int argc, char** argv) {
    CLI::App app{"murmuration pipeline"};
    app.require_subcommand(1);

    // enumerate
    long long height_bound = 0;
    bool count_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "stream curves of height <= X as CSV A,B,H");
    enumerate->add_option("--height-bound", height_bound, "naive height cutoff X")->required();
    enumerate->add_flag("--count-only", count_only, "print only the number of curves");

    CLI11_PARSE(app, argc, argv);

    if (enumerate->parsed()) {
        if (count_only) {
            std::printf("%llu\n", murm::count_curves(height_bound));
        } else {
            std::printf("A,B,H\n");
            murm::enumerate_curves(height_bound, [](const murm::CurveSeed& s) {
                std::printf("%lld,%lld,%s\n", s.A, s.B,
                            murm::to_string_i128(murm::naive_height(s.A, s.B)).c_str());
            });
        }
        return 0;
    }
    return 0;
}
