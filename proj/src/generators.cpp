#include "torimod/generators.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <tuple>

#include "torimod/errors.hpp"
#include "torimod/formal_series.hpp"
#include "torimod/json_io.hpp"

namespace torimod {

namespace {

std::mutex cache_mtx;
bool cache_dir_set = false;
std::string cache_dir_value;

std::string cache_dir_locked() {
    if (!cache_dir_set) {
        const char* env = std::getenv("TORIMOD_CACHE");
        cache_dir_value = env ? env : "";
        cache_dir_set = true;
    }
    return cache_dir_value;
}

std::optional<QSeries> cache_load(const std::string& key) {
    std::lock_guard<std::mutex> lock(cache_mtx);
    std::string dir = cache_dir_locked();
    if (dir.empty()) return std::nullopt;
    std::ifstream in(dir + "/" + key + ".json");
    if (!in) return std::nullopt;
    try {
        Json j;
        in >> j;
        return qseries_from_json(j);
    } catch (...) {
        return std::nullopt;  // corrupt cache entries are treated as misses
    }
}

void cache_store(const std::string& key, const QSeries& f) {
    std::lock_guard<std::mutex> lock(cache_mtx);
    std::string dir = cache_dir_locked();
    if (dir.empty()) return;
    try {
        std::filesystem::create_directories(dir);
        std::string final_path = dir + "/" + key + ".json";
        std::string tmp = final_path + ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(tmp);
            if (!out) return;
            out << qseries_to_json(f).dump();
        }
        std::filesystem::rename(tmp, final_path);
    } catch (...) {
        // cache writes are best effort
    }
}

Rational factorial_inv(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(1) / Rational(f);
}

Integer int_pow(long base, int e) {
    Integer b(base), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// in-memory memo for generator expansions
std::mutex memo_mtx;
std::map<std::tuple<long, long, int, long>, QSeries> s_memo;
std::map<std::pair<int, long>, QSeries> r_memo;

QSeries s_series_uncached(long a, long l, int k, long prec) {
    unsigned L = static_cast<unsigned>(l);
    Cyclotomic zeta = Cyclotomic::zeta_power(L, a);

    // trigonometric part of the constant: k! [v^k] of
    // log(v/(e^v-1)) + log((zeta e^v - 1)/(zeta - 1))
    size_t W = static_cast<size_t>(k);
    FormalSeries<Cyclotomic> A(W, Cyclotomic::zero(L));  // (e^v-1)/v
    for (size_t j = 0; j <= W; ++j)
        A[j] = Cyclotomic(factorial_inv(static_cast<int>(j) + 1), L);
    FormalSeries<Cyclotomic> B(W, Cyclotomic::zero(L));  // (zeta e^v - 1)/(zeta - 1)
    Cyclotomic scale = cyc_inv(zeta - Cyclotomic::one(L)) * zeta;
    B[0] = Cyclotomic::one(L);
    for (size_t j = 1; j <= W; ++j) B[j] = scale * factorial_inv(static_cast<int>(j));
    Cyclotomic constant =
        (formal_log(B)[W] - formal_log(A)[W]) * (Rational(1) / factorial_inv(k));

    std::vector<Cyclotomic> coeffs;
    coeffs.push_back(constant);
    long sign = (k % 2 == 0) ? 1 : -1;
    for (long d = 1; d <= prec; ++d) {
        Cyclotomic c = Cyclotomic::zero(L);
        for (long j = 1; j <= d; ++j) {
            if (d % j != 0) continue;
            Cyclotomic unit = Cyclotomic::zeta_power(L, a * (j % l)) +
                              Cyclotomic::zeta_power(L, -a * (j % l)) * Rational(sign) -
                              Cyclotomic(Rational(1 + sign), L);
            c += unit * Rational(int_pow(j, k - 1));
        }
        coeffs.push_back(-c);
    }
    return QSeries(L, 0, prec, std::move(coeffs));
}

QSeries r_series_uncached(int k, long prec) {
    size_t W = static_cast<size_t>(k);
    // constant: k! [v^k] log((e^v-1)/v * e^{-v/2})
    FormalSeries<Cyclotomic> A(W, Cyclotomic::zero(1));
    for (size_t j = 0; j <= W; ++j) A[j] = Cyclotomic(factorial_inv(static_cast<int>(j) + 1));
    FormalSeries<Cyclotomic> E(W, Cyclotomic::zero(1));
    Rational half(-1, 2);
    Rational pw(1);
    for (size_t j = 0; j <= W; ++j) {
        E[j] = Cyclotomic(pw * factorial_inv(static_cast<int>(j)));
        pw *= half;
    }
    Cyclotomic constant = formal_log(A * E)[W] * (Rational(1) / factorial_inv(k));

    std::vector<Cyclotomic> coeffs;
    coeffs.push_back(constant);
    for (long d = 1; d <= prec; ++d) {
        Integer sigma = 0;
        for (long j = 1; j <= d; ++j)
            if (d % j == 0) sigma += int_pow(j, k - 1);
        coeffs.push_back(Cyclotomic(Rational(-2 * sigma)));
    }
    return QSeries(1, 0, prec, std::move(coeffs));
}

}  // namespace

GeneratorSymbol GeneratorSymbol::s(long a, long l, int k) {
    if (l < 1 || k < 1) throw Error("s-symbol needs l >= 1 and k >= 1");
    if (a % l == 0) throw BadResidue();
    long an = ((a % l) + l) % l;
    return GeneratorSymbol{Kind::S, an, k};
}

GeneratorSymbol GeneratorSymbol::r(int k) {
    if (k < 2) throw Error("r-symbol needs k >= 2");
    if (k % 2 != 0) throw OddOrder();
    return GeneratorSymbol{Kind::R, 0, k};
}

int monomial_weight(const GeneratorMonomial& m) {
    int w = 0;
    for (const auto& s : m) w += s.k;
    return w;
}

void GeneratorPoly::add_term(GeneratorMonomial mono, Cyclotomic coeff) {
    std::sort(mono.begin(), mono.end());
    if (!mono.empty() && monomial_weight(mono) != weight)
        throw Error("generator polynomial must be weight-homogeneous");
    auto it = terms.find(mono);
    if (it == terms.end()) {
        if (!coeff.is_zero()) terms.emplace(std::move(mono), std::move(coeff));
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
}

long sturm_bound(long l, int weight) {
    if (l < 1 || weight < 1) throw Error("sturm_bound needs l >= 1, weight >= 1");
    // index of Gamma_1(l) in SL_2(Z): l^2 prod_{p | l} (1 - 1/p^2)
    long idx = l * l;
    long rem = l;
    for (long p = 2; p * p <= rem; ++p) {
        if (rem % p != 0) continue;
        idx = idx / (p * p) * (p * p - 1);
        while (rem % p == 0) rem /= p;
    }
    if (rem > 1) idx = idx / (rem * rem) * (rem * rem - 1);
    long num = static_cast<long>(weight) * idx;
    return (num + 11) / 12 + 1;
}

void set_cache_directory(std::string dir) {
    std::lock_guard<std::mutex> lock(cache_mtx);
    cache_dir_value = std::move(dir);
    cache_dir_set = true;
}

std::string cache_directory() {
    std::lock_guard<std::mutex> lock(cache_mtx);
    return cache_dir_locked();
}

QSeries s_series(long a, long l, int k, long prec) {
    if (l < 1) throw Error("level must be positive");
    if (k < 1) throw Error("order must be at least 1");
    if (prec < 0) throw Error("precision must be nonnegative");
    if (a % l == 0) throw BadResidue();
    a = ((a % l) + l) % l;

    auto key = std::make_tuple(l, a, k, prec);
    {
        std::lock_guard<std::mutex> lock(memo_mtx);
        auto it = s_memo.find(key);
        if (it != s_memo.end()) return it->second;
    }
    std::string disk_key = "s_" + std::to_string(l) + "_" + std::to_string(a) + "_" +
                           std::to_string(k) + "_" + std::to_string(prec);
    QSeries result = [&] {
        if (auto hit = cache_load(disk_key)) return *hit;
        QSeries f = s_series_uncached(a, l, k, prec);
        cache_store(disk_key, f);
        return f;
    }();
    std::lock_guard<std::mutex> lock(memo_mtx);
    s_memo.emplace(key, result);
    return result;
}

QSeries r_series(int k, long prec) {
    if (k % 2 != 0) throw OddOrder();
    if (k < 2) throw Error("order must be at least 2");
    if (prec < 0) throw Error("precision must be nonnegative");
    auto key = std::make_pair(k, prec);
    {
        std::lock_guard<std::mutex> lock(memo_mtx);
        auto it = r_memo.find(key);
        if (it != r_memo.end()) return it->second;
    }
    std::string disk_key = "r_" + std::to_string(k) + "_" + std::to_string(prec);
    QSeries result = [&] {
        if (auto hit = cache_load(disk_key)) return *hit;
        QSeries f = r_series_uncached(k, prec);
        cache_store(disk_key, f);
        return f;
    }();
    std::lock_guard<std::mutex> lock(memo_mtx);
    r_memo.emplace(key, result);
    return result;
}

QSeries relation_coefficient(long l, const std::vector<long>& residues, long prec) {
    if (residues.empty()) throw BadResidues();
    long sum = 0;
    for (long a : residues) {
        if (a % l == 0) throw BadResidues();
        sum += a;
    }
    if (((sum % l) + l) % l != 0) throw BadResidues();

    size_t N = residues.size() - 1;
    unsigned L = static_cast<unsigned>(l);
    FormalSeries<QSeries> H(N, QSeries(L, prec));
    for (size_t k = 1; k <= N; ++k) {
        QSeries acc(L, prec);
        for (long a : residues) acc = acc + s_series(a, l, static_cast<int>(k), prec);
        H[k] = acc * factorial_inv(static_cast<int>(k));
    }
    if (N == 0) return QSeries(L, 0, prec, {Cyclotomic::one(L)});  // exp(0) = 1
    return formal_exp(H)[N];
}

QSeries evaluate(const GeneratorSymbol& sym, long l, long prec) {
    if (sym.kind == GeneratorSymbol::Kind::S) return s_series(sym.a, l, sym.k, prec);
    return r_series(sym.k, prec).embed(static_cast<unsigned>(l));
}

QSeries evaluate(const GeneratorPoly& g, long prec) {
    unsigned L = static_cast<unsigned>(g.l);
    QSeries acc(L, prec);
    for (const auto& [mono, coeff] : g.terms) {
        QSeries term = QSeries::constant(Cyclotomic::one(L), prec);
        for (const auto& sym : mono) term = term * evaluate(sym, g.l, prec);
        acc = acc + term * coeff;
    }
    return acc;
}

std::optional<std::vector<Cyclotomic>> cyc_solve_any(std::vector<std::vector<Cyclotomic>> A,
                                                     std::vector<Cyclotomic> b) {
    size_t n = A.size(), m = n ? A[0].size() : 0;
    if (b.size() != n) throw Error("cyc_solve_any: shape mismatch");
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < m && row < n; ++col) {
        size_t p = row;
        while (p < n && A[p][col].is_zero()) ++p;
        if (p == n) continue;
        std::swap(A[row], A[p]);
        std::swap(b[row], b[p]);
        Cyclotomic inv = cyc_inv(A[row][col]);
        for (size_t j = col; j < m; ++j) A[row][j] = A[row][j] * inv;
        b[row] = b[row] * inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || A[i][col].is_zero()) continue;
            Cyclotomic f = A[i][col];
            for (size_t j = col; j < m; ++j) A[i][j] = A[i][j] - f * A[row][j];
            b[i] = b[i] - f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < n; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    unsigned L = n ? A[0][0].level() : 1;
    std::vector<Cyclotomic> x(m, Cyclotomic::zero(L));
    for (size_t i = 0; i < row; ++i) x[pivot_col[i]] = b[i];
    return x;
}

size_t cyc_rank(std::vector<std::vector<Cyclotomic>> A) {
    size_t n = A.size(), m = n ? A[0].size() : 0;
    size_t row = 0;
    for (size_t col = 0; col < m && row < n; ++col) {
        size_t p = row;
        while (p < n && A[p][col].is_zero()) ++p;
        if (p == n) continue;
        std::swap(A[row], A[p]);
        Cyclotomic inv = cyc_inv(A[row][col]);
        for (size_t j = col; j < m; ++j) A[row][j] = A[row][j] * inv;
        for (size_t i = row + 1; i < n; ++i) {
            if (A[i][col].is_zero()) continue;
            Cyclotomic f = A[i][col];
            for (size_t j = col; j < m; ++j) A[i][j] = A[i][j] - f * A[row][j];
        }
        ++row;
    }
    return row;
}

namespace {

// all weight-k monomials in s_{b/l}^(1), b = 1..l-1, lexicographic
void s1_monomials(long l, int k, long min_b, GeneratorMonomial& cur,
                  std::vector<GeneratorMonomial>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (long b = min_b; b <= l - 1; ++b) {
        cur.push_back(GeneratorSymbol{GeneratorSymbol::Kind::S, b, 1});
        s1_monomials(l, k - 1, b, cur, out);
        cur.pop_back();
    }
}

}  // namespace

GeneratorPoly reduce_to_s1(const GeneratorSymbol& sym, long l) {
    if (l < 5) throw Error("reduce_to_s1 requires level >= 5");
    int k = sym.k;
    long B = sturm_bound(l, k);
    QSeries target = evaluate(sym, l, B);

    std::vector<GeneratorMonomial> monos;
    GeneratorMonomial cur;
    s1_monomials(l, k, 1, cur, monos);

    std::vector<std::vector<Cyclotomic>> A(static_cast<size_t>(B + 1));
    std::vector<Cyclotomic> b(static_cast<size_t>(B + 1), Cyclotomic::zero(static_cast<unsigned>(l)));
    for (long d = 0; d <= B; ++d) b[d] = target.coefficient(d);
    for (const auto& mono : monos) {
        QSeries series = QSeries::constant(Cyclotomic::one(static_cast<unsigned>(l)), B);
        for (const auto& s : mono) series = series * s_series(s.a, l, 1, B);
        for (long d = 0; d <= B; ++d) A[d].push_back(series.coefficient(d));
    }
    auto sol = cyc_solve_any(std::move(A), std::move(b));
    if (!sol) throw ReductionNotFound();

    GeneratorPoly out;
    out.l = l;
    out.weight = k;
    for (size_t t = 0; t < monos.size(); ++t)
        if (!(*sol)[t].is_zero()) out.add_term(monos[t], (*sol)[t]);
    return out;
}

}  // namespace torimod
