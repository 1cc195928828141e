#include <cstdlib>
#include <iostream>

#include "adc/acceptance.hpp"

int main(int argc, char** argv) {
    adc::AcceptanceOptions options;
    options.jobs = 2;
    if (argc > 1)
        options.jobs = std::atoi(argv[1]);
    bool ok = adc::run_acceptance(std::cout, options);
    return ok ? 0 : 1;
}
