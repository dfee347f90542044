#include "chainloop/tableau.hpp"

#include <algorithm>
#include <string>

#include "chainloop/errors.hpp"

namespace chainloop {

namespace {

void require_valid(const RectTableau& t, const char* op) {
    if (!t.is_valid()) {
        throw ValidationError(std::string(op) +
                              " requires a valid standard Young tableau");
    }
}

}  // namespace

RectTableau::RectTableau(int rows, int cols, std::vector<int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ < 1 || cols_ < 1) {
        throw ValidationError("tableau dimensions must be positive");
    }
    if (entries_.size() != static_cast<size_t>(rows_) * cols_) {
        throw ValidationError("tableau entry count does not match its shape");
    }
}

RectTableau::RectTableau(const std::vector<std::vector<int>>& rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
    if (rows.empty() || rows.front().empty()) {
        throw ValidationError("tableau dimensions must be positive");
    }
    cols_ = static_cast<int>(rows.front().size());
    entries_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) {
            throw ValidationError("tableau rows have unequal lengths");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

int RectTableau::at(int row, int col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_) {
        throw InvariantError("tableau cell (" + std::to_string(row) + "," +
                             std::to_string(col) + ") out of range");
    }
    return entries_[static_cast<size_t>(row - 1) * cols_ + (col - 1)];
}

bool RectTableau::is_valid() const {
    const int total = size();
    std::vector<bool> seen(static_cast<size_t>(total) + 1, false);
    for (int v : entries_) {
        if (v < 1 || v > total || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = true;
    }
    for (int r = 1; r <= rows_; ++r) {
        for (int c = 1; c <= cols_; ++c) {
            if (c < cols_ && at(r, c) >= at(r, c + 1)) return false;
            if (r < rows_ && at(r, c) >= at(r + 1, c)) return false;
        }
    }
    return true;
}

std::pair<int, int> RectTableau::position_of(int entry) const {
    for (int r = 1; r <= rows_; ++r) {
        for (int c = 1; c <= cols_; ++c) {
            if (at(r, c) == entry) return {r, c};
        }
    }
    throw ValidationError("entry " + std::to_string(entry) +
                          " not present in tableau");
}

bool validate(const RectTableau& t) { return t.is_valid(); }

RectTableau evacuate(const RectTableau& t) {
    require_valid(t, "evacuate");
    const int m = t.rows();
    const int n = t.cols();
    const int total = m * n;
    std::vector<int> out(static_cast<size_t>(total));
    for (int r = 1; r <= m; ++r) {
        for (int c = 1; c <= n; ++c) {
            out[static_cast<size_t>(r - 1) * n + (c - 1)] =
                total + 1 - t.at(m + 1 - r, n + 1 - c);
        }
    }
    return RectTableau(m, n, std::move(out));
}

RectTableau transpose(const RectTableau& t) {
    require_valid(t, "transpose");
    const int m = t.rows();
    const int n = t.cols();
    std::vector<int> out(static_cast<size_t>(m) * n);
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= m; ++c) {
            out[static_cast<size_t>(r - 1) * m + (c - 1)] = t.at(c, r);
        }
    }
    return RectTableau(n, m, std::move(out));
}

CellStats cell_stats(const RectTableau& t, int entry) {
    if (entry < 1 || entry > t.size()) {
        throw ValidationError("entry " + std::to_string(entry) +
                              " out of range 1.." + std::to_string(t.size()));
    }
    const auto [row, col] = t.position_of(entry);
    int first = 0;
    int last = 0;
    for (int r = 1; r <= t.rows(); ++r) {
        if (t.at(r, 1) < entry) ++first;
        if (t.at(r, t.cols()) < entry) ++last;
    }
    return CellStats{row, col, first, last};
}

int count_at_most_in_col(const RectTableau& t, int entry, int col) {
    if (col < 1 || col > t.cols()) {
        throw ValidationError("column " + std::to_string(col) +
                              " out of range 1.." + std::to_string(t.cols()));
    }
    int count = 0;
    for (int r = 1; r <= t.rows(); ++r) {
        if (t.at(r, col) <= entry) ++count;
    }
    return count;
}

std::vector<RectTableau> enumerate_tableaux(int rows, int cols, int ceiling) {
    if (rows < 1 || cols < 1) {
        throw ValidationError("tableau dimensions must be positive");
    }
    if (static_cast<long long>(rows) * cols > ceiling) {
        throw ValidationError("shape " + std::to_string(rows) + "x" +
                              std::to_string(cols) +
                              " exceeds the enumeration ceiling " +
                              std::to_string(ceiling));
    }
    const int total = rows * cols;
    std::vector<RectTableau> result;
    std::vector<int> grid(static_cast<size_t>(total), 0);
    std::vector<int> height(static_cast<size_t>(cols), 0);

    // Place 1..total left to right into column tops; a column may receive the
    // next entry only while it is strictly shorter than its left neighbour.
    auto place = [&](auto&& self, int next) -> void {
        if (next > total) {
            result.emplace_back(rows, cols, grid);
            return;
        }
        for (int c = 0; c < cols; ++c) {
            if (height[static_cast<size_t>(c)] == rows) continue;
            if (c > 0 && height[static_cast<size_t>(c - 1)] <=
                             height[static_cast<size_t>(c)]) {
                continue;
            }
            const int r = height[static_cast<size_t>(c)];
            grid[static_cast<size_t>(r) * cols + c] = next;
            ++height[static_cast<size_t>(c)];
            self(self, next + 1);
            --height[static_cast<size_t>(c)];
            grid[static_cast<size_t>(r) * cols + c] = 0;
        }
    };
    place(place, 1);

    std::sort(result.begin(), result.end(),
              [](const RectTableau& a, const RectTableau& b) {
                  return a.entries() < b.entries();
              });
    return result;
}

mpz_class hook_count(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw ValidationError("tableau dimensions must be positive");
    }
    mpz_class numerator;
    mpz_fac_ui(numerator.get_mpz_t(),
               static_cast<unsigned long>(rows) * cols);
    mpz_class hooks = 1;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            hooks *= (rows - 1 - r) + (cols - 1 - c) + 1;
        }
    }
    mpz_class count;
    mpz_divexact(count.get_mpz_t(), numerator.get_mpz_t(), hooks.get_mpz_t());
    return count;
}

}  // namespace chainloop
