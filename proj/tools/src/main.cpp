#include <csignal>
#include <iostream>

#include "bmn_app/app.hpp"

namespace {

extern "C" void onInterrupt(int) { bmn::app::interrupted().store(true); }

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, onInterrupt);
    std::vector<std::string> args(argv, argv + argc);
    return bmn::app::run(args, std::cout, std::cerr);
}
