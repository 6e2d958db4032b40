#include <cstddef>

namespace kneser {
namespace detail {

// The 198-vertex triple-domination witness for K(11,5), one vertex per line.
namespace {
const char kText[] =
    "1 2 3 4 5\n1 2 3 4 7\n1 2 3 4 8\n1 2 3 5 9\n1 2 3 5 11\n1 2 3 6 7\n"
    "1 2 3 6 8\n1 2 3 6 11\n1 2 3 7 10\n1 2 3 8 9\n1 2 3 9 10\n1 2 3 10 11\n"
    "1 2 4 5 6\n1 2 4 5 9\n1 2 4 6 8\n1 2 4 6 10\n1 2 4 7 9\n1 2 4 7 11\n"
    "1 2 4 8 10\n1 2 4 9 11\n1 2 4 10 11\n1 2 5 6 8\n1 2 5 6 10\n1 2 5 7 8\n"
    "1 2 5 7 9\n1 2 5 7 10\n1 2 5 8 11\n1 2 5 10 11\n1 2 6 7 9\n1 2 6 7 11\n"
    "1 2 6 9 10\n1 2 6 9 11\n1 2 7 8 10\n1 2 7 8 11\n1 2 8 9 10\n1 2 8 9 11\n"
    "1 3 4 5 6\n1 3 4 5 10\n1 3 4 6 7\n1 3 4 6 9\n1 3 4 7 11\n1 3 4 8 9\n"
    "1 3 4 8 10\n1 3 4 9 11\n1 3 4 10 11\n1 3 5 6 7\n1 3 5 6 10\n1 3 5 7 8\n"
    "1 3 5 7 9\n1 3 5 8 10\n1 3 5 8 11\n1 3 5 9 11\n1 3 6 8 9\n1 3 6 8 11\n"
    "1 3 6 9 10\n1 3 6 10 11\n1 3 7 8 10\n1 3 7 8 11\n1 3 7 9 10\n1 3 7 9 11\n"
    "1 4 5 6 11\n1 4 5 7 8\n1 4 5 7 10\n1 4 5 7 11\n1 4 5 8 9\n1 4 5 8 11\n"
    "1 4 5 9 10\n1 4 6 7 8\n1 4 6 7 10\n1 4 6 8 11\n1 4 6 9 10\n1 4 6 9 11\n"
    "1 4 7 8 9\n1 4 7 9 10\n1 4 8 10 11\n1 5 6 7 9\n1 5 6 7 11\n1 5 6 8 9\n"
    "1 5 6 8 10\n1 5 6 9 11\n1 5 7 10 11\n1 5 8 9 10\n1 5 9 10 11\n1 6 7 8 9\n"
    "1 6 7 8 10\n1 6 7 10 11\n1 6 8 10 11\n1 7 8 9 11\n1 7 9 10 11\n1 8 9 10 11\n"
    "2 3 4 5 7\n2 3 4 5 8\n2 3 4 6 9\n2 3 4 6 10\n2 3 4 6 11\n2 3 4 7 10\n"
    "2 3 4 8 11\n2 3 4 9 10\n2 3 4 9 11\n2 3 5 6 9\n2 3 5 6 10\n2 3 5 6 11\n"
    "2 3 5 7 10\n2 3 5 7 11\n2 3 5 8 9\n2 3 5 8 10\n2 3 6 7 8\n2 3 6 7 9\n"
    "2 3 6 8 10\n2 3 7 8 9\n2 3 7 8 11\n2 3 7 9 11\n2 3 8 10 11\n2 3 9 10 11\n"
    "2 4 5 6 7\n2 4 5 6 11\n2 4 5 7 8\n2 4 5 8 10\n2 4 5 9 10\n2 4 5 9 11\n"
    "2 4 5 10 11\n2 4 6 7 9\n2 4 6 7 10\n2 4 6 8 9\n2 4 6 8 11\n2 4 7 8 9\n"
    "2 4 7 8 11\n2 4 7 10 11\n2 4 8 9 10\n2 5 6 7 8\n2 5 6 7 11\n2 5 6 8 9\n"
    "2 5 6 9 10\n2 5 7 9 10\n2 5 7 9 11\n2 5 8 9 11\n2 5 8 10 11\n2 6 7 8 10\n"
    "2 6 7 10 11\n2 6 8 9 11\n2 6 8 10 11\n2 6 9 10 11\n2 7 8 9 10\n2 7 9 10 11\n"
    "3 4 5 6 8\n3 4 5 6 9\n3 4 5 7 9\n3 4 5 7 11\n3 4 5 8 11\n3 4 5 9 10\n"
    "3 4 5 10 11\n3 4 6 7 8\n3 4 6 7 11\n3 4 6 8 10\n3 4 6 10 11\n3 4 7 8 9\n"
    "3 4 7 8 10\n3 4 7 9 10\n3 4 8 9 11\n3 5 6 7 8\n3 5 6 7 10\n3 5 6 8 11\n"
    "3 5 6 9 11\n3 5 7 8 9\n3 5 7 10 11\n3 5 8 9 10\n3 5 9 10 11\n3 6 7 9 10\n"
    "3 6 7 9 11\n3 6 7 10 11\n3 6 8 9 10\n3 6 8 9 11\n3 7 8 10 11\n3 8 9 10 11\n"
    "4 5 6 7 9\n4 5 6 7 10\n4 5 6 8 9\n4 5 6 8 10\n4 5 6 10 11\n4 5 7 8 10\n"
    "4 5 7 9 11\n4 5 8 9 11\n4 6 7 8 11\n4 6 7 9 11\n4 6 8 9 10\n4 6 9 10 11\n"
    "4 7 8 10 11\n4 7 9 10 11\n4 8 9 10 11\n5 6 7 8 11\n5 6 7 9 10\n5 6 8 10 11\n"
    "5 6 9 10 11\n5 7 8 9 10\n5 7 8 9 11\n5 7 8 10 11\n6 7 8 9 10\n6 7 8 9 11\n"
;
}  // namespace

const char* k115_gamma3_text() { return kText; }

}  // namespace detail
}  // namespace kneser
