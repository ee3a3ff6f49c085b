#include "borderlab/linalg.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <queue>

#include "borderlab/errors.hpp"

namespace borderlab {

void SparseMatrixQ::addEntry(std::size_t r, std::size_t c, mpq_class v) {
    if (r >= rows_ || c >= cols_) throw ArgumentError("matrix entry out of bounds");
    if (v == 0) return;
    data_[r].emplace_back(c, std::move(v));
    finalized_ = false;
}

void SparseMatrixQ::finalize() const {
    if (finalized_) return;
    for (auto& row : data_) {
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<std::size_t, mpq_class>> merged;
        for (auto& [c, v] : row) {
            if (!merged.empty() && merged.back().first == c) {
                merged.back().second += v;
            } else {
                merged.emplace_back(c, std::move(v));
            }
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const auto& e) { return e.second == 0; }),
                     merged.end());
        row = std::move(merged);
    }
    finalized_ = true;
}

const std::vector<std::pair<std::size_t, mpq_class>>& SparseMatrixQ::row(std::size_t r) const {
    finalize();
    return data_[r];
}

std::size_t SparseMatrixQ::nonzeroCount() const {
    finalize();
    std::size_t total = 0;
    for (const auto& row : data_) total += row.size();
    return total;
}

void SparseMatrixQ::dumpCoordinate(std::ostream& os) const {
    finalize();
    for (std::size_t r = 0; r < rows_; ++r) {
        for (const auto& [c, v] : data_[r]) {
            os << r << ' ' << c << ' ' << v.get_str() << '\n';
        }
    }
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;  // sorted by column

// Clears denominators and strips integer content; keeps entries coprime.
IntRow toPrimitiveIntRow(const std::vector<std::pair<std::size_t, mpq_class>>& row) {
    IntRow out;
    if (row.empty()) return out;
    mpz_class denLcm = 1;
    for (const auto& [c, v] : row) denLcm = lcm(denLcm, v.get_den());
    mpz_class content = 0;
    out.reserve(row.size());
    for (const auto& [c, v] : row) {
        mpz_class x = v.get_num() * (denLcm / v.get_den());
        content = gcd(content, x);
        out.emplace_back(c, std::move(x));
    }
    if (content > 1) {
        for (auto& [c, x] : out) x /= content;
    }
    return out;
}

void stripContent(IntRow& row) {
    mpz_class content = 0;
    for (const auto& [c, x] : row) {
        content = gcd(content, x);
        if (content == 1) return;
    }
    if (content > 1) {
        for (auto& [c, x] : row) x /= content;
    }
}

const mpz_class* rowEntry(const IntRow& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it == row.end() || it->first != col) return nullptr;
    return &it->second;
}

// target := f1 * target - f2 * pivot, with the pivot column guaranteed to
// cancel; result is content-stripped.
IntRow combineRows(const IntRow& target, const IntRow& pivot, const mpz_class& f1,
                   const mpz_class& f2, std::size_t dropCol) {
    IntRow out;
    out.reserve(target.size() + pivot.size());
    std::size_t a = 0, b = 0;
    mpz_class tmp;
    while (a < target.size() || b < pivot.size()) {
        std::size_t ca = a < target.size() ? target[a].first : static_cast<std::size_t>(-1);
        std::size_t cb = b < pivot.size() ? pivot[b].first : static_cast<std::size_t>(-1);
        if (ca < cb) {
            if (ca != dropCol) out.emplace_back(ca, target[a].second * f1);
            ++a;
        } else if (cb < ca) {
            if (cb != dropCol) out.emplace_back(cb, pivot[b].second * (-f2));
            ++b;
        } else {
            if (ca != dropCol) {
                tmp = target[a].second * f1 - pivot[b].second * f2;
                if (tmp != 0) out.emplace_back(ca, tmp);
            }
            ++a;
            ++b;
        }
    }
    stripContent(out);
    return out;
}

// Shared scaffolding for sparse elimination: lazily maintained column->rows
// lists plus a lazily invalidated (nnz, row) heap for pivot-row selection.
struct EliminationState {
    std::vector<char> active;
    std::vector<std::vector<std::uint32_t>> colRows;
    using HeapItem = std::pair<std::size_t, std::uint32_t>;  // (nnz, row)
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;

    EliminationState(std::size_t nrows, std::size_t ncols)
        : active(nrows, 1), colRows(ncols) {}

    template <typename RowT>
    void indexRow(std::size_t r, const RowT& row) {
        for (const auto& e : row) colRows[e.first].push_back(static_cast<std::uint32_t>(r));
        heap.emplace(row.size(), static_cast<std::uint32_t>(r));
    }
};

}  // namespace

std::size_t rankExact(const SparseMatrixQ& M) {
    M.finalize();
    std::vector<IntRow> rows;
    rows.reserve(M.rows());
    for (std::size_t r = 0; r < M.rows(); ++r) {
        IntRow row = toPrimitiveIntRow(M.row(r));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    EliminationState st(rows.size(), M.cols());
    for (std::size_t r = 0; r < rows.size(); ++r) st.indexRow(r, rows[r]);

    std::size_t rank = 0;
    while (!st.heap.empty()) {
        auto [nnz, r] = st.heap.top();
        st.heap.pop();
        if (!st.active[r] || rows[r].size() != nnz) continue;  // stale entry

        // Pivot column within the row: unit values first, then the column
        // with the shortest (stale-inclusive) row list, then lowest index.
        std::size_t pivCol = rows[r][0].first;
        {
            std::size_t bestKeyUnit = 2, bestKeyLen = static_cast<std::size_t>(-1);
            for (const auto& [c, v] : rows[r]) {
                std::size_t unit = (v == 1 || v == -1) ? 0 : 1;
                std::size_t len = st.colRows[c].size();
                if (unit < bestKeyUnit || (unit == bestKeyUnit && len < bestKeyLen)) {
                    bestKeyUnit = unit;
                    bestKeyLen = len;
                    pivCol = c;
                }
            }
        }
        const mpz_class pivVal = *rowEntry(rows[r], pivCol);

        auto candidates = std::move(st.colRows[pivCol]);
        st.colRows[pivCol].clear();
        for (std::uint32_t r2 : candidates) {
            if (r2 == r || !st.active[r2]) continue;
            const mpz_class* a = rowEntry(rows[r2], pivCol);
            if (!a) continue;  // stale
            mpz_class g = gcd(pivVal, *a);
            mpz_class f1 = pivVal / g;
            mpz_class f2 = *a / g;
            IntRow updated = combineRows(rows[r2], rows[r], f1, f2, pivCol);
            rows[r2] = std::move(updated);
            if (rows[r2].empty()) {
                st.active[r2] = 0;
            } else {
                st.indexRow(r2, rows[r2]);
            }
        }
        st.active[r] = 0;
        IntRow().swap(rows[r]);
        ++rank;
    }
    return rank;
}

bool isPrime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (p % q == 0) return p == q;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = p - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t out = 1;
        a %= m;
        while (e) {
            if (e & 1) out = mulmod(out, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return out;
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, p);
        if (x == 1 || x == p - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, p);
            if (x == p - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

using ModRow = std::vector<std::pair<std::size_t, std::uint64_t>>;

std::uint64_t invMod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; p prime, a nonzero mod p
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p), newr = static_cast<long long>(a % p);
    while (newr != 0) {
        long long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

const std::uint64_t* rowEntry(const ModRow& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it == row.end() || it->first != col) return nullptr;
    return &it->second;
}

// target := target - factor * pivot (mod p), pivot column cancels.
ModRow combineRowsMod(const ModRow& target, const ModRow& pivot, std::uint64_t factor,
                      std::size_t dropCol, std::uint64_t p) {
    ModRow out;
    out.reserve(target.size() + pivot.size());
    std::size_t a = 0, b = 0;
    while (a < target.size() || b < pivot.size()) {
        std::size_t ca = a < target.size() ? target[a].first : static_cast<std::size_t>(-1);
        std::size_t cb = b < pivot.size() ? pivot[b].first : static_cast<std::size_t>(-1);
        if (ca < cb) {
            if (ca != dropCol) out.emplace_back(ca, target[a].second);
            ++a;
        } else if (cb < ca) {
            if (cb != dropCol) {
                std::uint64_t v = p - (factor * pivot[b].second) % p;
                if (v != p) out.emplace_back(cb, v);
            }
            ++b;
        } else {
            if (ca != dropCol) {
                std::uint64_t sub = (factor * pivot[b].second) % p;
                std::uint64_t v = (target[a].second + p - sub) % p;
                if (v != 0) out.emplace_back(ca, v);
            }
            ++a;
            ++b;
        }
    }
    return out;
}

}  // namespace

std::size_t rankModP(const SparseMatrixQ& M, std::uint64_t p) {
    if (!isPrime(p)) throw ArgumentError("modulus " + std::to_string(p) + " is not prime");
    if (p >= (1ull << 31)) throw ArgumentError("modulus too large (need p < 2^31)");
    M.finalize();

    std::vector<ModRow> rows;
    rows.reserve(M.rows());
    mpz_class tmp;
    for (std::size_t r = 0; r < M.rows(); ++r) {
        ModRow row;
        for (const auto& [c, v] : M.row(r)) {
            mpz_class den = v.get_den();
            if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) {
                throw ArgumentError("entry denominator divisible by p");
            }
            tmp = v.get_num() % static_cast<long>(p);
            std::uint64_t num = tmp < 0 ? static_cast<std::uint64_t>(tmp.get_si() + static_cast<long>(p))
                                        : static_cast<std::uint64_t>(tmp.get_si());
            tmp = den % static_cast<long>(p);
            std::uint64_t d = static_cast<std::uint64_t>(tmp.get_si());
            std::uint64_t val = (num * invMod(d, p)) % p;
            if (val != 0) row.emplace_back(c, val);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }

    EliminationState st(rows.size(), M.cols());
    for (std::size_t r = 0; r < rows.size(); ++r) st.indexRow(r, rows[r]);

    std::size_t rank = 0;
    while (!st.heap.empty()) {
        auto [nnz, r] = st.heap.top();
        st.heap.pop();
        if (!st.active[r] || rows[r].size() != nnz) continue;

        std::size_t pivCol = rows[r][0].first;
        std::size_t bestLen = static_cast<std::size_t>(-1);
        for (const auto& [c, v] : rows[r]) {
            std::size_t len = st.colRows[c].size();
            if (len < bestLen) {
                bestLen = len;
                pivCol = c;
            }
        }
        std::uint64_t pivInv = invMod(*rowEntry(rows[r], pivCol), p);

        auto candidates = std::move(st.colRows[pivCol]);
        st.colRows[pivCol].clear();
        for (std::uint32_t r2 : candidates) {
            if (r2 == r || !st.active[r2]) continue;
            const std::uint64_t* a = rowEntry(rows[r2], pivCol);
            if (!a) continue;
            std::uint64_t factor = (*a * pivInv) % p;
            ModRow updated = combineRowsMod(rows[r2], rows[r], factor, pivCol, p);
            rows[r2] = std::move(updated);
            if (rows[r2].empty()) {
                st.active[r2] = 0;
            } else {
                st.indexRow(r2, rows[r2]);
            }
        }
        st.active[r] = 0;
        ModRow().swap(rows[r]);
        ++rank;
    }
    return rank;
}

std::vector<std::vector<mpz_class>> kernelBasisRational(const SparseMatrixQ& M) {
    M.finalize();
    const std::size_t ncols = M.cols();
    using QRow = std::map<std::size_t, mpq_class>;
    std::vector<QRow> rows;
    for (std::size_t r = 0; r < M.rows(); ++r) {
        if (M.row(r).empty()) continue;
        QRow row;
        for (const auto& [c, v] : M.row(r)) row[c] = v;
        rows.push_back(std::move(row));
    }

    // Column-ordered RREF: pivot columns are chosen left to right, which
    // makes the free-column set and the kernel basis canonical.
    std::vector<long> pivotRowOfCol(ncols, -1);
    std::vector<char> isPivotRow(rows.size(), 0);
    for (std::size_t c = 0; c < ncols; ++c) {
        std::size_t best = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (isPivotRow[r]) continue;
            auto it = rows[r].find(c);
            if (it == rows[r].end()) continue;
            if (best == rows.size() || rows[r].size() < rows[best].size()) best = r;
        }
        if (best == rows.size()) continue;
        mpq_class inv = 1 / rows[best][c];
        for (auto& [cc, v] : rows[best]) v *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == best) continue;
            auto it = rows[r].find(c);
            if (it == rows[r].end()) continue;
            mpq_class factor = it->second;
            rows[r].erase(it);
            for (const auto& [cc, v] : rows[best]) {
                if (cc == c) continue;
                auto [it2, inserted] = rows[r].emplace(cc, -factor * v);
                if (!inserted) {
                    it2->second -= factor * v;
                    if (it2->second == 0) rows[r].erase(it2);
                }
            }
        }
        pivotRowOfCol[c] = static_cast<long>(best);
        isPivotRow[best] = 1;
    }

    std::vector<std::vector<mpz_class>> kernel;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (pivotRowOfCol[f] >= 0) continue;
        std::vector<mpq_class> v(ncols, 0);
        v[f] = 1;
        for (std::size_t c = 0; c < ncols; ++c) {
            if (pivotRowOfCol[c] < 0) continue;
            const QRow& row = rows[static_cast<std::size_t>(pivotRowOfCol[c])];
            auto it = row.find(f);
            if (it != row.end()) v[c] = -it->second;
        }
        // integer-clear to coprime entries with positive first nonzero
        mpz_class denLcm = 1;
        for (const auto& q : v) denLcm = lcm(denLcm, q.get_den());
        std::vector<mpz_class> w(ncols);
        mpz_class content = 0;
        for (std::size_t c = 0; c < ncols; ++c) {
            w[c] = v[c].get_num() * (denLcm / v[c].get_den());
            content = gcd(content, w[c]);
        }
        if (content > 1) {
            for (auto& x : w) x /= content;
        }
        for (const auto& x : w) {
            if (x != 0) {
                if (x < 0) {
                    for (auto& y : w) y = -y;
                }
                break;
            }
        }
        kernel.push_back(std::move(w));
    }
    std::stable_sort(kernel.begin(), kernel.end(), [](const auto& a, const auto& b) {
        auto lead = [](const std::vector<mpz_class>& v) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] != 0) return i;
            }
            return v.size();
        };
        return lead(a) < lead(b);
    });
    return kernel;
}

}  // namespace borderlab
