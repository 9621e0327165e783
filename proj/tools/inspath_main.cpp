#include <iostream>

#include "inspath/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const auto plan = inspath::parse_args(args);
        return inspath::execute(plan);
    } catch (const inspath::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << inspath::usage_synopsis();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
