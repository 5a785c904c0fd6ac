#include "triset/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace triset {

mpz_class binom(long a, long b) {
    if (a < 0 || b < 0 || a < b) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), (unsigned long)a, (unsigned long)b);
    return out;
}

mpz_class upper_bound_ell2(int n, int k) {
    if (k < 2) throw std::invalid_argument("score-2 ceiling needs k >= 2");
    if (n < 3 * k - 2) throw std::invalid_argument("score-2 ceiling needs n >= 3k-2");
    return binom(n + 1, k - 1) + binom(n, k - 2);
}

mpz_class upper_bound_ell3(int n, int k) {
    if (k < 2) throw std::invalid_argument("score-3 ceiling needs k >= 2");
    if (n < 3 * k - 3) throw std::invalid_argument("score-3 ceiling needs n >= 3k-3");
    return binom(n, k - 1) + 2 * binom(n, k - 3) + 3 * binom(n - 1, k - 3);
}

int prefix_span(int j, int ell) {
    if (ell < 0) throw std::invalid_argument("prefix span needs ell >= 0");
    if (3 * j < ell) throw std::invalid_argument("prefix span needs 3j >= ell");
    if (3 * j >= 2 * ell) return 3 * j - ell;
    return 2 * j - (ell + 2) / 3; // 2j - ceil(ell/3)
}

LowerBound lower_bound_uniform(int n, int k, int ell) {
    if (ell < 0 || 3 * k < ell)
        throw std::invalid_argument("uniform lower bound needs 0 <= ell <= 3k");
    LowerBound best;
    best.value = 0;
    best.best_j = (ell + 2) / 3;
    for (int j = (ell + 2) / 3; j <= k; ++j) {
        int f = prefix_span(j, ell);
        mpz_class sum = 0;
        for (int i = j; i <= k; ++i) sum += binom(f, i) * binom(n - f, k - i);
        if (sum > best.value) {
            best.value = sum;
            best.best_j = j;
        }
    }
    return best;
}

std::optional<ClosedForm> closed_form_uniform(int n, int k, int ell) {
    if (n < 1 || k < 0 || ell < 0) return std::nullopt;
    // every triple of k-sets on [n] clears ell: proven sub-regime first
    if (3 * k <= 2 * n && ell <= 3 * k - n) return ClosedForm{binom(n, k), "trivial"};
    if (n == 3 * k - ell) return ClosedForm{binom(n, k), "base"};
    if (2 * n < 3 * k && ell <= 9 * k - 5 * n) return ClosedForm{binom(n, k), "remark"};
    if ((ell == 2 || ell == 3) && (long)n >= 4L * k * k * k && k >= 2)
        return ClosedForm{binom(n - 1, k - 1), "thm4"};
    return std::nullopt;
}

mpz_class recursion_upper_bound(int n, int k, int ell,
                                const std::function<mpz_class(int, int, int)>& table) {
    if (ell != 2 && ell != 3)
        throw std::invalid_argument("the recursion step holds for ell 2 and 3 only");
    if (k < 3) throw std::invalid_argument("the recursion step needs k >= 3");
    if (n <= 3 * k - ell) throw std::invalid_argument("the recursion step needs n > 3k-ell");
    return table(n - 1, k, ell) + table(n - 1, k - 1, ell);
}

namespace {

struct BudgetSplit {
    long p;
    int q;
};

BudgetSplit split_budget(long x) {
    if (x < 0) throw std::invalid_argument("budget must be nonnegative");
    return {x / 6, (int)(x % 6)};
}

// n >= 2^(3p+2) p^2 + p + 1, evaluated without overflow
bool above_theorem_threshold(int n, long p) {
    if (p > 19) return false; // threshold already exceeds 2^60
    long threshold = (1L << (3 * p + 2)) * p * p + p + 1;
    return n >= threshold;
}

} // namespace

mpz_class level_family_size(int n, long x) {
    auto [p, q] = split_budget(x);
    if (p < 1) throw std::invalid_argument("level construction needs x >= 6");
    if (n < p + 2) throw std::invalid_argument("level construction needs n >= p+2");
    mpz_class size = 0;
    for (long i = 0; i <= p; ++i) size += binom(n, i);
    if (q == 2) size += binom(n - 2, p - 1);
    if (q == 3 || q == 4) size += binom(n - 1, p);
    if (q == 5) size += binom(n - 1, p) + binom(n - 2, p);
    return size;
}

std::optional<ClosedForm> closed_form_nonuniform(int n, long x) {
    if (n < 1) return std::nullopt;
    auto [p, q] = split_budget(x);
    if (p == 0) {
        if (n == 1) return ClosedForm{2, "remark"};
        return ClosedForm{x <= 3 ? 2 : 3, "remark"};
    }
    if (!above_theorem_threshold(n, p)) return std::nullopt;
    return ClosedForm{level_family_size(n, x), "thm5"};
}

double star_threshold_ratio() {
    return (5.0 - std::sqrt(13.0)) / 6.0;
}

BoundReport bound_report_uniform(int n, int k, int ell) {
    BoundReport r;
    r.n = n;
    r.k = k;
    r.ell = ell;

    bool lower_ok = ell >= 0 && 3 * k >= ell;
    r.preconditions.emplace_back("3k >= ell", lower_ok);
    if (lower_ok) r.lower = lower_bound_uniform(n, k, ell);

    if (ell == 2) {
        bool ok = k >= 2 && n >= 3 * k - 2;
        r.preconditions.emplace_back("n >= 3k-2", ok);
        if (ok) {
            r.upper = upper_bound_ell2(n, k);
            r.upper_source = "thm1";
        }
    } else if (ell == 3) {
        bool ok = k >= 2 && n >= 3 * k - 3;
        r.preconditions.emplace_back("n >= 3k-3", ok);
        if (ok) {
            r.upper = upper_bound_ell3(n, k);
            r.upper_source = "thm2";
        }
    }

    r.exact = closed_form_uniform(n, k, ell);
    return r;
}

BoundReport bound_report_nonuniform(int n, long x) {
    BoundReport r;
    r.n = n;
    r.x = x;
    auto [p, q] = split_budget(x);
    (void)q;
    r.preconditions.emplace_back("n >= p+2", n >= p + 2);
    if (p >= 1 && n >= p + 2) {
        LowerBound lo;
        lo.value = level_family_size(n, x);
        lo.best_j = (int)p; // level of the construction
        r.lower = lo;
    }
    r.exact = closed_form_nonuniform(n, x);
    if (r.exact.has_value() && !r.lower.has_value()) {
        LowerBound lo;
        lo.value = r.exact->value;
        lo.best_j = 0;
        r.lower = lo;
    }
    return r;
}

std::string to_json(const BoundReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    if (report.k.has_value()) j["k"] = *report.k;
    if (report.ell.has_value()) j["ell"] = *report.ell;
    if (report.x.has_value()) j["x"] = *report.x;
    if (report.lower.has_value()) {
        j["lower"]["value"] = report.lower->value.get_str();
        j["lower"]["j"] = report.lower->best_j;
    }
    if (report.upper.has_value()) {
        j["upper"]["value"] = report.upper->get_str();
        j["upper"]["source"] = report.upper_source;
    }
    if (report.exact.has_value()) {
        j["exact"]["value"] = report.exact->value.get_str();
        j["exact"]["source"] = report.exact->source;
    }
    nlohmann::json pre = nlohmann::json::object();
    for (const auto& [name, holds] : report.preconditions) pre[name] = holds;
    j["preconditions"] = pre;
    return j.dump();
}

} // namespace triset
