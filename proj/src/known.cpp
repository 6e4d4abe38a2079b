#include "entcone/known.hpp"

namespace entcone {

namespace {

// Coefficient order: 1 2 3 4 | 12 13 14 23 24 34 | 123 124 134 234
LinForm from_table(const int (&c)[14])
{
    static const std::initializer_list<int> sets[14] = {
        {1}, {2}, {3}, {4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
        {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    LinForm f(4);
    for (int i = 0; i < 14; ++i)
        f.set(SubsetMask::of(sets[i]), c[i]);
    return f;
}

}  // namespace

LinForm zhang_yeung()
{
    return from_table({-2, -2, -1, 0, 3, 3, 1, 3, 1, -1, -4, -1, 0, 0});
}

LinForm iterated_zhang_yeung()
{
    return from_table({-10, -10, -1, 0, 17, 10, 4, 10, 4, -3, -16, -5, 0, 0});
}

std::vector<LinForm> seven_variable_inequalities()
{
    return {
        from_table({-56, -4, -19, 0, 45, 67, 23, 22, -8, 9, -55, 0, -24, 0}),
        from_table({-34, -2, -11, -1, 27, 40, 15, 12, -5, 7, -32, 0, -16, 0}),
        from_table({-28, -1, -10, -2, 22, 34, 13, 11, -4, 6, -28, 0, -13, 0}),
    };
}

}  // namespace entcone
