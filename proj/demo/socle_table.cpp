// Example program: prints, for a small range of genera, the full vector of
// socle integrals int psi^{g-1-i} lambda_i lambda_g lambda_{g-1} together
// with the named closed-form evaluations derived from them.  Every value is
// an exact rational; pass a genus bound as the only argument (default 6).

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "taut/hodge.hpp"

namespace {

void row(const std::string& label, const taut::Rat& value) {
    std::cout << "  " << std::left << std::setw(34) << label << " = " << value.to_string()
              << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    long max_g = 6;
    if (argc > 1) {
        max_g = std::strtol(argv[1], nullptr, 10);
        if (max_g < 2) {
            std::cerr << "usage: " << argv[0] << " [max_genus >= 2]\n";
            return 2;
        }
    }

    for (long g = 2; g <= max_g; ++g) {
        const std::string lg = std::to_string(g);
        const std::string lg1 = std::to_string(g - 1);
        std::cout << "genus " << g << "\n";
        const std::vector<taut::Rat> socle = taut::socle_integrals(g);
        for (long i = 0; i < g; ++i)
            row("psi^" + std::to_string(g - 1 - i) + " lambda_" + std::to_string(i) +
                    " lambda_" + lg + " lambda_" + lg1,
                socle[static_cast<size_t>(i)]);
        row("kappa_" + std::to_string(g - 2) + " lambda_" + lg + " lambda_" + lg1,
            taut::socle_kappa_closed(g));
        row("lambda_" + lg + " lambda_" + lg1 + " lambda_" + std::to_string(g - 2),
            taut::triple_lambda_closed(g));
        row("kappa_" + std::to_string(2 * g - 3) + " lambda_" + lg,
            taut::kappa_lambda_closed(g));
        row("hyperelliptic value", taut::hyperelliptic_closed(g));
    }
    return 0;
}
