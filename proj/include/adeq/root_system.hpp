#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "adeq/checked.hpp"

namespace adeq {

constexpr int max_rank = 8;

/// @brief Weight in fundamental-weight coordinates. Entries beyond the rank stay zero.
struct Weight {
    std::array<long long, max_rank> c{};

    long long operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    long long& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

    bool operator==(const Weight& o) const { return c == o.c; }
    bool operator!=(const Weight& o) const { return c != o.c; }
    bool operator<(const Weight& o) const { return c < o.c; }

    Weight operator+(const Weight& o) const {
        Weight r;
        for (int i = 0; i < max_rank; ++i) r.c[i] = checked_add(c[i], o.c[i]);
        return r;
    }
    Weight operator-(const Weight& o) const {
        Weight r;
        for (int i = 0; i < max_rank; ++i) r.c[i] = checked_sub(c[i], o.c[i]);
        return r;
    }
    Weight operator-() const {
        Weight r;
        for (int i = 0; i < max_rank; ++i) r.c[i] = checked_sub(0, c[i]);
        return r;
    }
    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](long long v) { return v == 0; });
    }
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const {
        std::size_t seed = 0xcbf29ce484222325ULL;
        for (long long v : w.c) hash_mix(seed, static_cast<std::size_t>(v));
        return seed;
    }
};

enum class Family { A, D, E };

enum class Colour { black, white };

/// @brief Square integer matrix acting on weight coordinate vectors.
struct IntMatrix {
    int n = 0;
    std::array<std::array<long long, max_rank>, max_rank> a{};

    static IntMatrix identity(int n) {
        IntMatrix m;
        m.n = n;
        for (int i = 0; i < n; ++i) m.a[i][i] = 1;
        return m;
    }

    Weight apply(const Weight& w) const {
        Weight r;
        for (int i = 0; i < n; ++i) {
            long long s = 0;
            for (int j = 0; j < n; ++j) s = checked_add(s, checked_mul(a[i][j], w.c[j]));
            r.c[i] = s;
        }
        return r;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        IntMatrix r;
        r.n = n;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                long long s = 0;
                for (int k = 0; k < n; ++k) s = checked_add(s, checked_mul(a[i][k], o.a[k][j]));
                r.a[i][j] = s;
            }
        }
        return r;
    }

    bool operator==(const IntMatrix& o) const { return n == o.n && a == o.a; }
};

namespace detail {

/// @brief Exact determinant of the leading n-by-n block via Bareiss elimination.
inline long long bareiss_det(std::array<std::array<long long, max_rank>, max_rank> m, int n) {
    long long prev = 1;
    long long sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r) {
                if (m[r][k] != 0) { pivot = r; break; }
            }
            if (pivot < 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                long long num = checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j]));
                m[i][j] = num / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return checked_mul(sign, m[n - 1][n - 1]);
}

} // namespace detail

/// @brief Simply laced root system with its bipartite Coxeter-element geometry.
///
/// Nodes are labelled 1..rank: A_n is the path 1-2-..-n; D_n is the path
/// 1-..-(n-2) with fork nodes n-1 and n attached at n-2; E_n is the path
/// 1-..-(n-1) with node n attached at node 3. The default two-colouring is
/// breadth-first from node 1 with node 1 black. The Coxeter element applies
/// all black reflections first, then all white ones; the swapped view
/// exchanges the colour classes, which inverts the Coxeter element.
class RootSystem {
public:
    RootSystem(Family family, int rank) : family_(family), rank_(rank) {
        build_diagram();
        build_colouring();
        build_matrices();
        build_gram();
        build_bar();
        build_plane();
        validate();
    }

    Family family() const { return family_; }
    int rank() const { return rank_; }
    int coxeter_number() const { return h_; }

    std::string name() const {
        static const char* letters = "ADE";
        return std::string(1, letters[static_cast<int>(family_)]) + std::to_string(rank_);
    }

    /// @brief Cartan matrix entry for 1-based node labels.
    int cartan(int i, int j) const { return cartan_[idx(i)][idx(j)]; }

    const std::vector<int>& neighbours(int i) const { return neighbours_1based_[idx(i)]; }

    /// @brief Node colour, optionally in the swapped colouring.
    Colour colour(int i, bool swapped = false) const {
        Colour c = colour_[idx(i)];
        if (swapped) c = (c == Colour::black) ? Colour::white : Colour::black;
        return c;
    }

    /// @brief Diagram involution i -> bar(i) induced by the longest Weyl element.
    int bar(int i) const { return bar_[idx(i)] + 1; }

    Weight fundamental(int i) const {
        Weight w;
        w[idx(i)] = 1;
        return w;
    }

    Weight simple_reflection(int i, const Weight& mu) const {
        Weight r = mu;
        long long coeff = mu[idx(i)];
        for (int k = 0; k < rank_; ++k) {
            r[k] = checked_sub(r[k], checked_mul(coeff, cartan_[k][idx(i)]));
        }
        return r;
    }

    /// @brief Applies the Coxeter element to the given power; the swapped view uses its inverse.
    Weight coxeter_apply(const Weight& mu, long long power, bool swapped = false) const {
        long long p = swapped ? -power : power;
        p %= h_;
        if (p < 0) p += h_;
        Weight r = mu;
        for (long long k = 0; k < p; ++k) r = w_mat_.apply(r);
        return r;
    }

    /// @brief Orbit of the i-th fundamental weight under the Coxeter element; exactly h entries.
    std::vector<Weight> coxeter_orbit(int i, bool swapped = false) const {
        std::vector<Weight> orbit;
        orbit.reserve(static_cast<std::size_t>(h_));
        Weight cur = fundamental(i);
        const IntMatrix& step = swapped ? w_inv_mat_ : w_mat_;
        for (int n = 0; n < h_; ++n) {
            orbit.push_back(cur);
            cur = step.apply(cur);
        }
        return orbit;
    }

    /// @brief Full Weyl orbit of a weight, breadth-first. Throws if it exceeds the guard size.
    std::vector<Weight> weyl_orbit(const Weight& mu, std::size_t guard = 5'000'000) const {
        std::vector<Weight> orbit{mu};
        std::unordered_set<Weight, WeightHash> seen{mu};
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            Weight cur = orbit[head];
            for (int i = 1; i <= rank_; ++i) {
                Weight nxt = simple_reflection(i, cur);
                if (seen.insert(nxt).second) {
                    if (orbit.size() >= guard) throw std::runtime_error("weyl_orbit guard exceeded");
                    orbit.push_back(nxt);
                }
            }
        }
        return orbit;
    }

    /// @brief Numerator matrix of the fundamental-weight gram matrix; denominator is gram_den().
    long long gram_num(int i, int j) const { return gram_num_[idx(i)][idx(j)]; }
    long long gram_den() const { return gram_den_; }

    /// @brief Exact numerator of the inner product of two weights over gram_den().
    long long inner_num(const Weight& u, const Weight& v) const {
        long long s = 0;
        for (int i = 0; i < rank_; ++i) {
            if (u.c[i] == 0) continue;
            for (int j = 0; j < rank_; ++j) {
                s = checked_add(s, checked_mul(checked_mul(u.c[i], v.c[j]), gram_num_[i][j]));
            }
        }
        return s;
    }

    double inner(const Weight& u, const Weight& v) const {
        return static_cast<double>(inner_num(u, v)) / static_cast<double>(gram_den_);
    }

    /// @brief Coordinates of the weight's projection to the Coxeter eigenplane.
    std::array<double, 2> plane_project(const Weight& mu) const {
        std::array<double, max_rank> p{};
        for (int i = 0; i < rank_; ++i) {
            double s = 0;
            for (int j = 0; j < rank_; ++j) s += proj_[i][j] * static_cast<double>(mu.c[j]);
            p[i] = s;
        }
        return {plane_inner(basis1_, p), plane_inner(basis2_, p)};
    }

    /// @brief Signed angle from the projection of mu to the projection of rho, in (-pi, pi].
    ///
    /// The orientation makes the Coxeter element rotate by +2*pi/h. Throws if either
    /// projection vanishes.
    double plane_angle(const Weight& mu, const Weight& rho) const {
        auto p = plane_project(mu);
        auto q = plane_project(rho);
        if (std::hypot(p[0], p[1]) < 1e-9 || std::hypot(q[0], q[1]) < 1e-9) {
            throw std::domain_error("plane_angle: weight projects to zero");
        }
        double ang = std::atan2(p[0] * q[1] - p[1] * q[0], p[0] * q[0] + p[1] * q[1]);
        if (ang <= -pi() + 1e-9) ang = pi();
        return ang;
    }

    /// @brief Exact eigenplane ray position of w^power applied to a fundamental weight,
    /// in units of pi/h: black rays sit at even positions, white rays one unit below.
    long long position(int node, long long power, bool swapped = false) const {
        long long base = checked_mul(2, power);
        return colour(node, swapped) == Colour::black ? base : checked_sub(base, 1);
    }

    static double pi() { return 3.14159265358979323846; }

private:
    int idx(int node) const {
        if (node < 1 || node > rank_) throw std::domain_error("node label out of range");
        return node - 1;
    }

    void build_diagram() {
        bool ok = (family_ == Family::A && rank_ >= 1 && rank_ <= max_rank) ||
                  (family_ == Family::D && rank_ >= 4 && rank_ <= max_rank) ||
                  (family_ == Family::E && rank_ >= 6 && rank_ <= max_rank);
        if (!ok) throw std::domain_error("unsupported family/rank");

        std::vector<std::pair<int, int>> edges;
        switch (family_) {
            case Family::A:
                for (int i = 1; i < rank_; ++i) edges.emplace_back(i, i + 1);
                h_ = rank_ + 1;
                break;
            case Family::D:
                for (int i = 1; i < rank_ - 2; ++i) edges.emplace_back(i, i + 1);
                edges.emplace_back(rank_ - 2, rank_ - 1);
                edges.emplace_back(rank_ - 2, rank_);
                h_ = 2 * rank_ - 2;
                break;
            case Family::E:
                for (int i = 1; i < rank_ - 1; ++i) edges.emplace_back(i, i + 1);
                edges.emplace_back(3, rank_);
                h_ = rank_ == 6 ? 12 : rank_ == 7 ? 18 : 30;
                break;
        }

        for (int i = 0; i < rank_; ++i) {
            for (int j = 0; j < rank_; ++j) cartan_[i][j] = (i == j) ? 2 : 0;
        }
        adj_.assign(static_cast<std::size_t>(rank_), {});
        for (auto [u, v] : edges) {
            cartan_[u - 1][v - 1] = -1;
            cartan_[v - 1][u - 1] = -1;
            adj_[static_cast<std::size_t>(u - 1)].push_back(v - 1);
            adj_[static_cast<std::size_t>(v - 1)].push_back(u - 1);
        }
        neighbours_1based_.assign(static_cast<std::size_t>(rank_), {});
        for (int i = 0; i < rank_; ++i) {
            for (int j : adj_[static_cast<std::size_t>(i)]) {
                neighbours_1based_[static_cast<std::size_t>(i)].push_back(j + 1);
            }
            std::sort(neighbours_1based_[static_cast<std::size_t>(i)].begin(),
                      neighbours_1based_[static_cast<std::size_t>(i)].end());
        }
    }

    void build_colouring() {
        std::vector<int> depth(static_cast<std::size_t>(rank_), -1);
        std::vector<int> queue{0};
        depth[0] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : adj_[static_cast<std::size_t>(u)]) {
                if (depth[static_cast<std::size_t>(v)] < 0) {
                    depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                }
            }
        }
        colour_.resize(static_cast<std::size_t>(rank_));
        for (int i = 0; i < rank_; ++i) {
            if (depth[static_cast<std::size_t>(i)] < 0) throw std::logic_error("diagram not connected");
            colour_[static_cast<std::size_t>(i)] =
                depth[static_cast<std::size_t>(i)] % 2 == 0 ? Colour::black : Colour::white;
        }
    }

    IntMatrix reflection_matrix(int i0) const {
        IntMatrix m = IntMatrix::identity(rank_);
        for (int k = 0; k < rank_; ++k) m.a[k][i0] -= cartan_[k][i0];
        return m;
    }

    void build_matrices() {
        IntMatrix wb = IntMatrix::identity(rank_);
        IntMatrix ww = IntMatrix::identity(rank_);
        for (int i = 0; i < rank_; ++i) {
            if (colour_[static_cast<std::size_t>(i)] == Colour::black) {
                wb = wb * reflection_matrix(i);
            } else {
                ww = ww * reflection_matrix(i);
            }
        }
        w_mat_ = ww * wb;
        w_inv_mat_ = wb * ww;
    }

    void build_gram() {
        std::array<std::array<long long, max_rank>, max_rank> c{};
        for (int i = 0; i < rank_; ++i) {
            for (int j = 0; j < rank_; ++j) c[i][j] = cartan_[i][j];
        }
        gram_den_ = detail::bareiss_det(c, rank_);
        if (gram_den_ <= 0) throw std::logic_error("Cartan determinant must be positive");

        for (int i = 0; i < rank_; ++i) {
            for (int j = 0; j < rank_; ++j) {
                auto minor = c;
                for (int r = 0; r < rank_; ++r) minor[r][i] = (r == j) ? 1 : 0;
                gram_num_[i][j] = detail::bareiss_det(minor, rank_);
            }
        }
        for (int i = 0; i < rank_; ++i) {
            for (int j = 0; j < rank_; ++j) {
                long long s = 0;
                for (int k = 0; k < rank_; ++k) {
                    s = checked_add(s, checked_mul(static_cast<long long>(cartan_[i][k]), gram_num_[k][j]));
                }
                if (s != (i == j ? gram_den_ : 0)) throw std::logic_error("gram inversion failed");
            }
        }
    }

    void build_bar() {
        int half = h_ / 2;
        bar_.resize(static_cast<std::size_t>(rank_));
        for (int i = 1; i <= rank_; ++i) {
            int kappa = (h_ % 2 == 0) ? half
                        : (colour(i) == Colour::black ? half : half + 1);
            Weight cand = -coxeter_apply(fundamental(i), kappa);
            int found = 0;
            for (int j = 1; j <= rank_; ++j) {
                if (cand == fundamental(j)) { bar_[static_cast<std::size_t>(i - 1)] = j - 1; found = 1; break; }
            }
            if (!found) throw std::logic_error("bar involution: orbit antipode is not fundamental");
        }
    }

    static double plane_inner_static(const std::array<double, max_rank>& u,
                                     const std::array<double, max_rank>& v,
                                     const std::array<std::array<double, max_rank>, max_rank>& g,
                                     int rank) {
        double s = 0;
        for (int i = 0; i < rank; ++i) {
            for (int j = 0; j < rank; ++j) s += u[i] * g[i][j] * v[j];
        }
        return s;
    }

    double plane_inner(const std::array<double, max_rank>& u, const std::array<double, max_rank>& v) const {
        return plane_inner_static(u, v, gram_dbl_, rank_);
    }

    void build_plane() {
        for (int i = 0; i < rank_; ++i) {
            for (int j = 0; j < rank_; ++j) {
                gram_dbl_[i][j] = static_cast<double>(gram_num_[i][j]) / static_cast<double>(gram_den_);
            }
        }

        std::array<std::array<double, max_rank>, max_rank> wp{};
        for (int i = 0; i < rank_; ++i) wp[i][i] = 1.0;
        for (auto& row : proj_) row.fill(0.0);
        // h = 2 degenerates the two complex eigenvalues to -1; the eigenprojector is (I - w)/2.
        if (h_ == 2) {
            for (int i = 0; i < rank_; ++i) {
                for (int j = 0; j < rank_; ++j) {
                    double wij = static_cast<double>(w_mat_.a[i][j]);
                    proj_[i][j] = ((i == j ? 1.0 : 0.0) - wij) / 2.0;
                }
            }
        } else {
            for (int n = 0; n < h_; ++n) {
                double coeff = (2.0 / h_) * std::cos(2.0 * pi() * n / h_);
                for (int i = 0; i < rank_; ++i) {
                    for (int j = 0; j < rank_; ++j) proj_[i][j] += coeff * wp[i][j];
                }
                std::array<std::array<double, max_rank>, max_rank> next{};
                for (int i = 0; i < rank_; ++i) {
                    for (int j = 0; j < rank_; ++j) {
                        double s = 0;
                        for (int k = 0; k < rank_; ++k) {
                            s += static_cast<double>(w_mat_.a[i][k]) * wp[k][j];
                        }
                        next[i][j] = s;
                    }
                }
                wp = next;
            }
        }

        auto column = [&](int j) {
            std::array<double, max_rank> col{};
            for (int i = 0; i < rank_; ++i) col[i] = proj_[i][j];
            return col;
        };
        int best = 0;
        double best_norm = -1.0;
        for (int j = 0; j < rank_; ++j) {
            double n2 = plane_inner(column(j), column(j));
            if (n2 > best_norm) { best_norm = n2; best = j; }
        }
        if (best_norm <= 1e-12) throw std::logic_error("plane projector vanished");
        basis1_ = column(best);
        double n1 = std::sqrt(best_norm);
        for (double& v : basis1_) v /= n1;

        basis2_.fill(0.0);
        if (h_ > 2) {
            int best2 = -1;
            double best2_norm = 1e-6;
            std::array<double, max_rank> best_res{};
            for (int j = 0; j < rank_; ++j) {
                auto col = column(j);
                double along = plane_inner(basis1_, col);
                for (int i = 0; i < rank_; ++i) col[i] -= along * basis1_[i];
                double n2 = plane_inner(col, col);
                if (n2 > best2_norm) { best2_norm = n2; best2 = j; best_res = col; }
            }
            if (best2 < 0) throw std::logic_error("plane basis is rank deficient");
            double n2 = std::sqrt(best2_norm);
            for (int i = 0; i < rank_; ++i) basis2_[i] = best_res[i] / n2;

            if (plane_angle(fundamental(1), coxeter_apply(fundamental(1), 1)) < 0) {
                for (double& v : basis2_) v = -v;
            }
        }
    }

    void validate() {
        for (int i = 0; i < rank_; ++i) {
            for (int j : adj_[static_cast<std::size_t>(i)]) {
                if (colour_[static_cast<std::size_t>(i)] == colour_[static_cast<std::size_t>(j)]) {
                    throw std::logic_error("colouring is not proper");
                }
            }
        }
        IntMatrix p = IntMatrix::identity(rank_);
        IntMatrix id = IntMatrix::identity(rank_);
        for (int k = 1; k <= h_; ++k) {
            p = p * w_mat_;
            if (k < h_ && p == id) throw std::logic_error("Coxeter order is smaller than h");
        }
        if (!(p == id)) throw std::logic_error("Coxeter element order differs from h");
        if (!(w_mat_ * w_inv_mat_ == id)) throw std::logic_error("Coxeter inverse mismatch");
        for (int i = 1; i <= rank_; ++i) {
            if (bar(bar(i)) != i) throw std::logic_error("bar involution does not square to identity");
        }

        double err = 0.0;
        for (int i = 0; i < rank_; ++i) {
            for (int j = 0; j < rank_; ++j) {
                double pp = 0.0;
                double pw = 0.0;
                double wpd = 0.0;
                for (int k = 0; k < rank_; ++k) {
                    pp += proj_[i][k] * proj_[k][j];
                    pw += proj_[i][k] * static_cast<double>(w_mat_.a[k][j]);
                    wpd += static_cast<double>(w_mat_.a[i][k]) * proj_[k][j];
                }
                err = std::max(err, std::abs(pp - proj_[i][j]));
                err = std::max(err, std::abs(pw - wpd));
            }
        }
        if (err > 1e-9) throw std::logic_error("plane projector invariants violated");

        for (int i = 1; i <= rank_; ++i) {
            auto pr = plane_project(fundamental(i));
            if (std::hypot(pr[0], pr[1]) < 1e-9) {
                throw std::logic_error("fundamental weight projects to zero");
            }
        }
        if (h_ > 2) {
            double ang = plane_angle(fundamental(1), coxeter_apply(fundamental(1), 1));
            if (std::abs(ang - 2.0 * pi() / h_) > 1e-9) {
                throw std::logic_error("plane orientation is not +2*pi/h");
            }
        }
    }

    Family family_;
    int rank_;
    int h_ = 0;
    std::array<std::array<int, max_rank>, max_rank> cartan_{};
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> neighbours_1based_;
    std::vector<Colour> colour_;
    std::vector<int> bar_;
    IntMatrix w_mat_;
    IntMatrix w_inv_mat_;
    std::array<std::array<long long, max_rank>, max_rank> gram_num_{};
    long long gram_den_ = 1;
    std::array<std::array<double, max_rank>, max_rank> gram_dbl_{};
    std::array<std::array<double, max_rank>, max_rank> proj_{};
    std::array<double, max_rank> basis1_{};
    std::array<double, max_rank> basis2_{};
};

/// @brief Wraps an eigenplane position difference into the half-open window (-h, h].
inline long long wrap_position(long long delta, int h) {
    long long period = 2LL * h;
    long long r = delta % period;
    if (r < 0) r += period;   // now in [0, 2h)
    if (r > h) r -= period;   // now in (-h, h]
    return r;
}

} // namespace adeq
