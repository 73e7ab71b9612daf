#pragma once

// Published six-decimal endpoints of the certified prohibition interval of
// P_d, d = 3..15.

#include <array>

namespace reference {

struct PathRow
{
    int d;
    const char * lo;
    const char * hi;
};

inline constexpr std::array<PathRow, 13> path_rows = {{
    {3, "0.414214", "0.585786"},
    {4, "0.381966", "0.618034"},
    {5, "0.366025", "0.633975"},
    {6, "0.356896", "0.643104"},
    {7, "0.351153", "0.648847"},
    {8, "0.347296", "0.652704"},
    {9, "0.344577", "0.655423"},
    {10, "0.342585", "0.657415"},
    {11, "0.341081", "0.658919"},
    {12, "0.339918", "0.660082"},
    {13, "0.339000", "0.661000"},
    {14, "0.338261", "0.661739"},
    {15, "0.337659", "0.662341"},
}};

} // namespace reference
