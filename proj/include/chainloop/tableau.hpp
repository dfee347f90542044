#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace chainloop {

// A rectangular grid of positive integers, candidate standard Young tableau.
// The grid shape (m rows, n columns, all rows full) is enforced structurally;
// whether the filling is standard is a separate check so that callers can
// inspect rejected input.
class RectTableau {
public:
    RectTableau(int rows, int cols, std::vector<int> entries);  // row-major
    explicit RectTableau(const std::vector<std::vector<int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int size() const { return rows_ * cols_; }

    int at(int row, int col) const;  // 1-based
    const std::vector<int>& entries() const { return entries_; }

    // Entries are exactly {1..mn} and strictly increase along rows and
    // down columns.
    bool is_valid() const;

    // 1-based (row, col) of the cell holding `entry`; entry must be present.
    std::pair<int, int> position_of(int entry) const;

    bool operator==(const RectTableau&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<int> entries_;
};

bool validate(const RectTableau& t);

// 180 degree rotation composed with entry complementation i -> mn+1-i.
// Involution on rectangles; preserves the shape.
RectTableau evacuate(const RectTableau& t);

// Conjugation: mirror across the main diagonal; swaps the shape to n x m.
RectTableau transpose(const RectTableau& t);

struct CellStats {
    int row;             // 1-based row of the entry
    int col;             // 1-based column of the entry
    int less_in_first;   // entries strictly smaller in the first column
    int less_in_last;    // entries strictly smaller in the last column

    bool operator==(const CellStats&) const = default;
};

CellStats cell_stats(const RectTableau& t, int entry);

// Number of cells in column `col` (1-based) holding entries <= `entry`.
int count_at_most_in_col(const RectTableau& t, int entry, int col);

inline constexpr int kDefaultEnumerationCeiling = 16;

// Every valid rows x cols standard Young tableau exactly once, sorted
// lexicographically by the row-major reading of the entries.
std::vector<RectTableau> enumerate_tableaux(
    int rows, int cols, int ceiling = kDefaultEnumerationCeiling);

// Hook length formula: (mn)! / prod of hook lengths. Independent of the
// enumeration; used as its counting oracle.
mpz_class hook_count(int rows, int cols);

}  // namespace chainloop
