#include "kolchin/lattice.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace kolchin {

ExponentVector::ExponentVector(std::initializer_list<int> e) : entries(e) {
    for (int v : entries) {
        if (v < 0) throw std::invalid_argument("exponent entries must be nonnegative");
    }
}

ExponentVector::ExponentVector(std::vector<int> e) : entries(std::move(e)) {
    for (int v : entries) {
        if (v < 0) throw std::invalid_argument("exponent entries must be nonnegative");
    }
}

int ExponentVector::ord() const {
    int s = 0;
    for (int v : entries) s += v;
    return s;
}

bool ExponentVector::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](int v) { return v == 0; });
}

std::string ExponentVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ",";
        os << entries[i];
    }
    os << ")";
    return os.str();
}

ExponentVector unit_vector(int m, int direction) {
    if (direction < 1 || direction > m) {
        throw std::invalid_argument("unit_vector: direction out of range");
    }
    std::vector<int> e(static_cast<size_t>(m), 0);
    e[static_cast<size_t>(direction - 1)] = 1;
    return ExponentVector(std::move(e));
}

namespace {
void check_same_dim(const ExponentVector& v, const ExponentVector& w) {
    if (v.dim() != w.dim()) {
        throw std::invalid_argument("exponent vectors of different dimension");
    }
}
}  // namespace

bool dominates(const ExponentVector& v, const ExponentVector& w) {
    check_same_dim(v, w);
    for (int i = 0; i < v.dim(); ++i) {
        if (v[i] < w[i]) return false;
    }
    return true;
}

std::strong_ordering orderly_compare(const ExponentVector& v, const ExponentVector& w) {
    check_same_dim(v, w);
    if (auto c = v.ord() <=> w.ord(); c != 0) return c;
    return v.entries <=> w.entries;
}

ExponentVector join(const ExponentVector& v, const ExponentVector& w) {
    check_same_dim(v, w);
    std::vector<int> e(v.entries);
    for (int i = 0; i < v.dim(); ++i) e[static_cast<size_t>(i)] = std::max(v[i], w[i]);
    return ExponentVector(std::move(e));
}

ExponentVector add(const ExponentVector& v, const ExponentVector& w) {
    check_same_dim(v, w);
    std::vector<int> e(v.entries);
    for (int i = 0; i < v.dim(); ++i) e[static_cast<size_t>(i)] += w[i];
    return ExponentVector(std::move(e));
}

LeaderSet::LeaderSet(int m, std::vector<ExponentVector> points)
    : m_(m), points_(std::move(points)) {
    if (m_ < 0) throw std::invalid_argument("LeaderSet: negative dimension");
    for (const auto& p : points_) {
        if (p.dim() != m_) {
            throw std::invalid_argument("LeaderSet: point of wrong dimension");
        }
    }
    std::sort(points_.begin(), points_.end(),
              [](const ExponentVector& a, const ExponentVector& b) {
                  return orderly_compare(a, b) < 0;
              });
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

std::string LeaderSet::to_text() const {
    std::ostringstream os;
    for (size_t i = 0; i < points_.size(); ++i) {
        if (i) os << ";";
        os << points_[i].to_string();
    }
    return os.str();
}

std::string leader_set_to_json(const LeaderSet& E) {
    nlohmann::ordered_json j;
    j["m"] = E.dim();
    j["points"] = nlohmann::ordered_json::array();
    for (const auto& p : E.points()) j["points"].push_back(p.entries);
    return j.dump();
}

LeaderSet leader_set_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<ExponentVector> points;
    for (const auto& p : j.at("points")) {
        points.emplace_back(p.get<std::vector<int>>());
    }
    return LeaderSet(j.at("m").get<int>(), std::move(points));
}

LeaderSet antichain_reduce(const LeaderSet& E) {
    std::vector<ExponentVector> minimal;
    for (const auto& p : E.points()) {
        bool redundant = false;
        for (const auto& q : E.points()) {
            if (q == p) continue;
            // p is redundant when it dominates another leader; ties were
            // removed by deduplication.
            if (dominates(p, q)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(p);
    }
    return LeaderSet(E.dim(), std::move(minimal));
}

Int count_direct(const LeaderSet& E, std::int64_t s) {
    if (s < 0) throw std::invalid_argument("count_direct: negative order bound");
    const int m = E.dim();
    Int count = 0;
    std::vector<int> point(static_cast<size_t>(m), 0);

    std::function<void(int, std::int64_t)> walk = [&](int pos, std::int64_t budget) {
        if (pos == m) {
            ExponentVector n(point);
            for (const auto& e : E.points()) {
                if (dominates(n, e)) return;
            }
            count += 1;
            return;
        }
        for (std::int64_t v = 0; v <= budget; ++v) {
            point[static_cast<size_t>(pos)] = static_cast<int>(v);
            walk(pos + 1, budget - v);
        }
        point[static_cast<size_t>(pos)] = 0;
    };
    walk(0, s);
    return count;
}

namespace {

// Walks every subset of the reduced antichain, handing (sign, ord of join)
// to the sink. The empty subset arrives as (+1, 0).
void for_each_subset(const std::vector<ExponentVector>& pts, int m,
                     const std::function<void(int sign, int join_ord, bool nonempty)>& sink) {
    std::function<void(size_t, ExponentVector, int, bool)> rec =
        [&](size_t idx, ExponentVector current, int sign, bool nonempty) {
            if (idx == pts.size()) {
                sink(sign, current.ord(), nonempty);
                return;
            }
            rec(idx + 1, current, sign, nonempty);
            rec(idx + 1, join(current, pts[idx]), -sign, true);
        };
    rec(0, ExponentVector(std::vector<int>(static_cast<size_t>(m), 0)), +1, false);
}

const LeaderSet reduced_for_walk(const LeaderSet& E) {
    LeaderSet reduced = antichain_reduce(E);
    if (reduced.size() > 25) {
        throw std::invalid_argument("leader set too large for the subset walk");
    }
    return reduced;
}

}  // namespace

OmegaPolynomial omega_E(const LeaderSet& E) {
    const LeaderSet reduced = reduced_for_walk(E);
    const int m = E.dim();
    OmegaPolynomial out;
    for_each_subset(reduced.points(), m, [&](int sign, int join_ord, bool nonempty) {
        NumericalPolynomial term = NumericalPolynomial::shifted_simplex(m, join_ord);
        out.poly = sign > 0 ? out.poly + term : out.poly - term;
        if (nonempty) out.threshold = std::max<std::int64_t>(out.threshold, join_ord);
    });
    return out;
}

Int omega_exact(const LeaderSet& E, std::int64_t s) {
    if (s < 0) throw std::invalid_argument("omega_exact: negative order bound");
    const LeaderSet reduced = reduced_for_walk(E);
    const int m = E.dim();
    Int total = 0;
    for_each_subset(reduced.points(), m, [&](int sign, int join_ord, bool) {
        // C(s - N + m, m) with the truncated convention: zero when s < N.
        Int value = binomial(Int(static_cast<long>(s - join_ord + m)),
                             static_cast<unsigned long>(m));
        total += sign > 0 ? value : -value;
    });
    return total;
}

NumericalPolynomial omega_single_leader(const ExponentVector& leader) {
    const int m = leader.dim();
    const int n = leader.ord();
    return NumericalPolynomial::simplex(m) - NumericalPolynomial::shifted_simplex(m, n);
}

}  // namespace kolchin
