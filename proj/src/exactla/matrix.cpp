#include "bierkit/exactla/matrix.hpp"

#include "bierkit/exactla/error.hpp"

#include <string>
#include <utility>

namespace bierkit::exactla {

namespace {

void require_same_size(std::span<const Rational> a, std::span<const Rational> b, const char* what) {
    if (a.size() != b.size())
        throw ValidationError(std::string(what) + ": length mismatch " + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()));
}

BigInt lcm_of_denominators(std::span<const Rational> v) {
    BigInt l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.mpq().get_den_mpz_t());
    return l;
}

std::vector<BigInt> integer_row(std::span<const Rational> v) {
    const BigInt l = lcm_of_denominators(v);
    std::vector<BigInt> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(BigInt(x.mpq().get_num() * (l / x.mpq().get_den())));
    return out;
}

}  // namespace

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    require_same_size(a, b, "dot");
    mpq_class acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].mpq() * b[i].mpq();
    return Rational::from_mpq(acc);
}

Vec add(std::span<const Rational> a, std::span<const Rational> b) {
    require_same_size(a, b, "add");
    Vec out(a.begin(), a.end());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

Vec sub(std::span<const Rational> a, std::span<const Rational> b) {
    require_same_size(a, b, "sub");
    Vec out(a.begin(), a.end());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

Vec scale(std::span<const Rational> a, const Rational& s) {
    Vec out(a.begin(), a.end());
    for (auto& x : out) x *= s;
    return out;
}

bool is_zero(std::span<const Rational> a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Rational sum(std::span<const Rational> a) {
    mpq_class acc = 0;
    for (const auto& x : a) acc += x.mpq();
    return Rational::from_mpq(acc);
}

Vec primitive_integer(std::span<const Rational> v) {
    std::vector<BigInt> ints = integer_row(v);
    BigInt g = 0;
    for (const auto& x : ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    Vec out;
    out.reserve(v.size());
    if (g == 0) return Vec(v.begin(), v.end());
    for (auto& x : ints) out.emplace_back(BigInt(x / g));
    return out;
}

Vec primitive_integer_normalized(std::span<const Rational> v) {
    Vec out = primitive_integer(v);
    for (const auto& x : out) {
        if (x.is_zero()) continue;
        if (x.sign() < 0)
            for (auto& y : out) y = -y;
        break;
    }
    return out;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : data_(rows, Vec(cols)), cols_(cols) {}

RatMatrix::RatMatrix(std::vector<Vec> rows)
    : RatMatrix(std::move(rows), static_cast<std::size_t>(-1)) {}

RatMatrix::RatMatrix(std::vector<Vec> rows, std::size_t cols) : data_(std::move(rows)), cols_(cols) {
    if (cols_ == static_cast<std::size_t>(-1)) cols_ = data_.empty() ? 0 : data_.front().size();
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (data_[i].size() != cols_)
            throw ValidationError("ragged matrix: row " + std::to_string(i) + " has " +
                                  std::to_string(data_[i].size()) + " entries, expected " + std::to_string(cols_));
}

void RatMatrix::append_row(Vec r) {
    if (data_.empty() && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw ValidationError("append_row: width mismatch");
    data_.push_back(std::move(r));
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = data_[i][j];
    return t;
}

Vec RatMatrix::apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw ValidationError("apply: width mismatch");
    Vec out;
    out.reserve(rows());
    for (const auto& r : data_) out.push_back(dot(r, v));
    return out;
}

Echelon echelon(const RatMatrix& m) {
    std::vector<std::vector<BigInt>> a;
    a.reserve(m.rows());
    for (const auto& r : m.row_list()) a.push_back(integer_row(r));

    Echelon out;
    out.cols = m.cols();
    BigInt prev = 1;
    std::size_t r = 0;
    const std::size_t nrows = a.size();
    for (std::size_t col = 0; col < m.cols() && r < nrows; ++col) {
        std::size_t p = r;
        while (p < nrows && a[p][col] == 0) ++p;
        if (p == nrows) continue;
        std::swap(a[p], a[r]);
        out.pivot_cols.push_back(col);
        const BigInt& piv = a[r][col];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            const BigInt lead = a[i][col];
            for (std::size_t j = col + 1; j < m.cols(); ++j) {
                BigInt t = piv * a[i][j] - lead * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = piv;
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

std::size_t rank(const RatMatrix& m) { return echelon(m).rank(); }

std::vector<Vec> nullspace(const RatMatrix& m) {
    const Echelon e = echelon(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> x(n, 0);
        x[f] = 1;
        for (std::size_t k = e.rank(); k-- > 0;) {
            const std::size_t pc = e.pivot_cols[k];
            mpq_class acc = 0;
            for (std::size_t j = pc + 1; j < n; ++j)
                if (sgn(x[j]) != 0) acc += mpq_class(e.rows[k][j]) * x[j];
            x[pc] = -acc / mpq_class(e.rows[k][pc]);
        }
        Vec v;
        v.reserve(n);
        for (auto& q : x) v.push_back(Rational::from_mpq(q));
        basis.push_back(primitive_integer_normalized(v));
    }
    return basis;
}

std::optional<Vec> solve(const RatMatrix& m, std::span<const Rational> b) {
    if (b.size() != m.rows()) throw ValidationError("solve: rhs length mismatch");
    std::vector<Vec> aug;
    aug.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Vec r = m.row(i);
        r.push_back(b[i]);
        aug.push_back(std::move(r));
    }
    const Echelon e = echelon(RatMatrix(std::move(aug), m.cols() + 1));
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;

    const std::size_t n = m.cols();
    std::vector<mpq_class> x(n, 0);
    for (std::size_t k = e.rank(); k-- > 0;) {
        const std::size_t pc = e.pivot_cols[k];
        mpq_class acc = mpq_class(e.rows[k][n]);
        for (std::size_t j = pc + 1; j < n; ++j)
            if (sgn(x[j]) != 0) acc -= mpq_class(e.rows[k][j]) * x[j];
        x[pc] = acc / mpq_class(e.rows[k][pc]);
    }
    Vec out;
    out.reserve(n);
    for (auto& q : x) out.push_back(Rational::from_mpq(q));
    return out;
}

bool in_row_space(const RatMatrix& m, std::span<const Rational> v) {
    if (v.size() != m.cols()) throw ValidationError("in_row_space: width mismatch");
    RatMatrix ext = m;
    ext.append_row(Vec(v.begin(), v.end()));
    return rank(ext) == rank(m);
}

}  // namespace bierkit::exactla
