#ifndef ROOTLINE_CLI_HPP
#define ROOTLINE_CLI_HPP

#include <iosfwd>

namespace rootline::cli {

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    bool out_is_terminal = false;  // picks text instead of json when no --format is given
};

/// Exit status: 0 success (classify: every component is a multigraph line
/// graph), 1 negative result (classify: some component is not; class: bound
/// hit), 2 usage or input error, 3 a certificate or log failed re-checking.
int run(int argc, const char* const* argv, Streams io);

}  // namespace rootline::cli

#endif  // ROOTLINE_CLI_HPP
