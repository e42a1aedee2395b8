// Refits the empirical error constants and prints them as JSON.
#include "raux/expansion.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv)
{
    raux::configure_threads_from_env();
    raux::Calibration c = raux::calibrate();
    std::string text = raux::calibration_to_json(c);
    if (argc > 1) {
        std::ofstream(argv[1]) << text << "\n";
    }
    std::cout << text << "\n";
    return 0;
}
