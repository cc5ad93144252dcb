#include "symhecke/root_datum.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <sstream>

namespace symhecke {

const char* to_string(RootClass c)
{
    switch (c) {
    case RootClass::Real: return "real";
    case RootClass::Imaginary: return "imaginary";
    case RootClass::Complex: return "complex";
    }
    return "?";
}

namespace {

std::string vec_str(const IntVec& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

IntVec neg(IntVec v)
{
    for (Int& x : v) x = -x;
    return v;
}

IntVec axpy(const IntVec& y, Int a, const IntVec& x)
{
    IntVec out = y;
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += a * x[i];
    return out;
}

constexpr std::size_t kMaxRoots = 1000;

}  // namespace

int RootDatum::find_root(const IntVec& alpha) const
{
    auto it = index.find(alpha);
    return it == index.end() ? -1 : it->second;
}

IntVec RootDatum::theta_root(const IntVec& alpha) const { return theta.transpose() * alpha; }

IntVec RootDatum::theta_cochar(const IntVec& x) const { return theta * x; }

std::string root_name(const RootDatum& d, int idx)
{
    return (idx < d.num_positive ? "+" : "-") + vec_str(idx < d.num_positive ? d.root_coeffs[idx] : neg(d.root_coeffs[idx]));
}

RootDatum make_datum(const std::string& name, const IntMat& cartan, const IntMat& theta)
{
    RootDatum d;
    d.name = name;
    const int n = cartan.rows();
    if (n == 0 || cartan.cols() != n) throw InputError("cartan_matrix must be a nonempty square matrix");
    if (theta.rows() != n || theta.cols() != n) throw InputError("theta_on_costar_T must be " + std::to_string(n) + "x" + std::to_string(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && cartan(i, j) != 2) throw InputError("cartan_matrix diagonal entries must be 2");
            if (i != j && cartan(i, j) > 0) throw InputError("cartan_matrix off-diagonal entries must be <= 0");
            if (i != j && (cartan(i, j) == 0) != (cartan(j, i) == 0))
                throw InputError("cartan_matrix zero pattern is not symmetric");
        }
    d.rank_T = n;
    d.cartan = cartan;
    d.theta = theta;

    // close the simple (root, coroot) pairs under simple reflections
    std::map<IntVec, std::pair<IntVec, IntVec>> found;  // coeffs -> (root, coroot)
    std::deque<IntVec> queue;
    for (int j = 0; j < n; ++j) {
        IntVec c(n, 0), x(n, 0);
        c[j] = 1;
        x[j] = 1;
        d.simple_roots.push_back(cartan.col(j));
        found[c] = {cartan.col(j), x};
        queue.push_back(c);
    }
    while (!queue.empty()) {
        IntVec c = queue.front();
        queue.pop_front();
        auto [beta, cobeta] = found[c];
        for (int i = 0; i < n; ++i) {
            IntVec ei(n, 0);
            ei[i] = 1;
            Int k = RootDatum::pairing(beta, ei);
            IntVec nc = c;
            nc[i] -= k;
            if (found.count(nc)) continue;
            IntVec nb = axpy(beta, -k, d.simple_roots[i]);
            IntVec ncb = axpy(cobeta, -RootDatum::pairing(d.simple_roots[i], cobeta), ei);
            found[nc] = {nb, ncb};
            queue.push_back(nc);
            if (found.size() > kMaxRoots) throw InputError("cartan_matrix is not of finite type (root closure diverges)");
        }
    }

    std::vector<IntVec> pos;
    for (auto& [c, rc] : found) {
        bool nonneg = std::all_of(c.begin(), c.end(), [](Int v) { return v >= 0; });
        bool nonpos = std::all_of(c.begin(), c.end(), [](Int v) { return v <= 0; });
        if (!nonneg && !nonpos) throw InputError("cartan_matrix produced a root of mixed sign " + vec_str(c));
        if (nonneg) pos.push_back(c);
    }
    auto height = [](const IntVec& c) {
        Int h = 0;
        for (Int v : c) h += v;
        return h;
    };
    std::sort(pos.begin(), pos.end(), [&](const IntVec& a, const IntVec& b) {
        if (height(a) != height(b)) return height(a) < height(b);
        return a > b;
    });
    d.num_positive = int(pos.size());
    for (int sign : {1, -1})
        for (const IntVec& c : pos) {
            IntVec cc = sign > 0 ? c : neg(c);
            auto& [r, cr] = found.at(cc);
            d.index[r] = int(d.roots.size());
            d.roots.push_back(r);
            d.coroots.push_back(cr);
            d.root_coeffs.push_back(cc);
        }
    if (d.roots.size() != found.size()) throw InputError("root generation is inconsistent");

    if (theta * theta != IntMat::identity(n)) throw InputError("theta is not an involution (theta^2 != 1)");

    for (std::size_t a = 0; a < d.roots.size(); ++a) {
        const IntVec& alpha = d.roots[a];
        if (RootDatum::pairing(alpha, d.coroots[a]) != 2)
            throw InputError("pairing <alpha, coroot> != 2 for root " + root_name(d, int(a)));
        int t = d.find_root(d.theta_root(alpha));
        if (t < 0) throw InputError("theta does not permute roots: image of " + root_name(d, int(a)) + " is " + vec_str(d.theta_root(alpha)));
        if (d.theta_cochar(d.coroots[a]) != d.coroots[t])
            throw InputError("theta does not carry the coroot of " + root_name(d, int(a)) + " to the coroot of its image");
        d.theta_perm.push_back(t);
        for (const IntVec& beta : d.roots)
            if (d.find_root(axpy(beta, -RootDatum::pairing(beta, d.coroots[a]), alpha)) < 0)
                throw InputError("roots are not closed under the reflection of " + root_name(d, int(a)));
    }
    for (int i = 0; i < n; ++i) {
        IntVec ei(n, 0);
        ei[i] = 1;
        for (const IntVec& alpha : d.roots)
            if (RootDatum::pairing(d.theta_root(alpha), d.theta_cochar(ei)) != RootDatum::pairing(alpha, ei))
                throw InputError("theta does not preserve the pairing");
    }
    return d;
}

namespace {

IntMat json_matrix(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key)) throw InputError(std::string("schema violation: missing key '") + key + "'");
    const auto& m = j.at(key);
    if (!m.is_array()) throw InputError(std::string("schema violation: '") + key + "' must be an array of integer rows");
    std::vector<IntVec> rows;
    for (const auto& r : m) {
        if (!r.is_array()) throw InputError(std::string("schema violation: '") + key + "' rows must be arrays");
        IntVec row;
        for (const auto& x : r) {
            if (!x.is_number_integer()) throw InputError(std::string("schema violation: '") + key + "' entries must be integers");
            row.push_back(x.get<Int>());
        }
        rows.push_back(row);
    }
    try {
        return IntMat::from_rows(rows);
    } catch (const std::invalid_argument&) {
        throw InputError(std::string("schema violation: '") + key + "' is ragged");
    }
}

}  // namespace

RootDatum load_datum(const std::string& json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("schema violation: catalog entry must be an object");
    if (!j.contains("name") || !j.at("name").is_string()) throw InputError("schema violation: missing string key 'name'");
    return make_datum(j.at("name").get<std::string>(), json_matrix(j, "cartan_matrix"), json_matrix(j, "theta_on_costar_T"));
}

RootClass classify_root(const RootDatum& d, const IntVec& alpha)
{
    if (d.find_root(alpha) < 0) throw InputError("not a root: " + vec_str(alpha));
    IntVec t = d.theta_root(alpha);
    if (t == alpha) return RootClass::Imaginary;
    if (t == neg(alpha)) return RootClass::Real;
    return RootClass::Complex;
}

IntVec RestrictedSystem::coords_in_A(const IntVec& x) const
{
    RatVec c;
    if (!solve(to_rat(lattice_A.transpose()), to_rat(x), c)) throw TheoryViolation("vector " + vec_str(x) + " is not in X_*(A)");
    return to_int(c);
}

int RestrictedSystem::reflection_of(const IntVec& f) const
{
    if (is_zero(f)) return -1;
    IntVec p = primitive(f);
    if (dot(p, chamber_point) < 0) p = neg(p);
    for (std::size_t i = 0; i < reflections.size(); ++i)
        if (reflections[i].normal == p) return int(i);
    return -1;
}

RestrictedSystem build_restricted(const RootDatum& d)
{
    RestrictedSystem rs;
    const int n = d.rank_T;
    rs.lattice_A = integer_kernel(d.theta + IntMat::identity(n));
    rs.rank_A = rs.lattice_A.rows();
    rs.rank_zero = rs.rank_A == 0;
    const int k = rs.rank_A;

    for (std::size_t a = 0; a < d.roots.size(); ++a) {
        RootClass c = classify_root(d, d.roots[a]);
        rs.root_class.push_back(c);
        (c == RootClass::Real ? rs.n_real : c == RootClass::Imaginary ? rs.n_imaginary : rs.n_complex)++;
        IntVec f = rs.lattice_A * d.roots[a];
        if ((c == RootClass::Imaginary) != is_zero(f)) throw TheoryViolation("restriction of " + root_name(d, int(a)) + " is inconsistent with its class");
        rs.restriction.push_back(f);
        if (is_zero(f)) {
            rs.sigma_of_root.push_back(-1);
            continue;
        }
        auto it = std::find(rs.sigma.begin(), rs.sigma.end(), f);
        if (it == rs.sigma.end()) {
            rs.sigma_of_root.push_back(int(rs.sigma.size()));
            rs.sigma.push_back(f);
            rs.multiplicity.push_back(1);
        } else {
            rs.sigma_of_root.push_back(int(it - rs.sigma.begin()));
            rs.multiplicity[it - rs.sigma.begin()]++;
        }
    }

    rs.gram = IntMat(k, k);
    for (const IntVec& f : rs.restriction)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) rs.gram(i, j) += f[i] * f[j];

    // generic chamber point: a large multiple of the projection of 2*rho-check, perturbed
    IntVec rho2(n, 0);
    for (int a = 0; a < d.num_positive; ++a)
        for (int i = 0; i < n; ++i) rho2[i] += d.coroots[a][i];
    if (k > 0) {
        IntVec p = rho2;
        IntVec tr = d.theta_cochar(rho2);
        for (int i = 0; i < n; ++i) p[i] -= tr[i];
        IntVec cp = rs.coords_in_A(p);
        for (Int base = 2;; ++base) {
            IntVec z(k);
            Int pw = 1;
            for (int i = 0; i < k; ++i, pw *= base) z[i] = pw;
            Int bound = 0;
            for (const IntVec& f : rs.sigma) bound = std::max(bound, std::abs(dot(f, z)));
            IntVec l(k);
            for (int i = 0; i < k; ++i) l[i] = (bound + 1) * cp[i] + z[i];
            bool generic = std::all_of(rs.sigma.begin(), rs.sigma.end(), [&](const IntVec& f) { return dot(f, l) != 0; });
            if (generic) {
                rs.chamber_point = l;
                break;
            }
            if (base > 64) throw TheoryViolation("no generic chamber point found");
        }
    }
    IntVec lT = rs.lattice_A.transpose() * (k > 0 ? rs.chamber_point : IntVec{});
    if (k == 0) lT.assign(n, 0);
    for (std::size_t a = 0; a < d.roots.size(); ++a) {
        Int v = dot(d.roots[a], lT);
        rs.positive.push_back(v > 0 || (v == 0 && dot(d.roots[a], rho2) > 0));
    }

    // reflections: one per line of restricted roots
    std::vector<IntVec> lines;
    std::vector<std::vector<int>> members;
    for (std::size_t a = 0; a < d.roots.size(); ++a) {
        if (rs.sigma_of_root[a] < 0) continue;
        IntVec p = primitive(rs.restriction[a]);
        if (dot(p, rs.chamber_point) < 0) p = neg(p);
        auto it = std::find(lines.begin(), lines.end(), p);
        if (it == lines.end()) {
            lines.push_back(p);
            members.push_back({int(a)});
        } else {
            members[it - lines.begin()].push_back(int(a));
        }
    }
    RatMat Ginv = k > 0 ? inverse(to_rat(rs.gram)) : RatMat();
    std::vector<std::size_t> order(lines.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        int mx = *std::min_element(members[x].begin(), members[x].end());
        int my = *std::min_element(members[y].begin(), members[y].end());
        return mx < my;
    });
    for (std::size_t oi : order) {
        ReflectionData r;
        r.normal = lines[oi];
        r.phi_s = members[oi];
        std::sort(r.phi_s.begin(), r.phi_s.end());
        if (r.phi_s.size() % 2 != 0) throw TheoryViolation("odd number of roots on a restricted line");
        r.delta = int(r.phi_s.size() / 2);
        RatVec nv = to_rat(r.normal);
        RatVec v = Ginv * nv;
        Rat nn = dot(nv, v);
        RatMat R = RatMat::identity(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) R(i, j) -= Rat(2) * v[i] * nv[j] / nn;
        try {
            r.matrix = to_int(R);
        } catch (const std::runtime_error&) {
            throw TheoryViolation("reflection does not preserve X_*(A)");
        }
        for (int a : r.phi_s)
            if (rs.root_class[a] == RootClass::Real) {
                r.has_real = true;
                if (r.delta == 1 && rs.positive[a]) r.real_root = a;
            }
        if (r.delta == 1 && r.real_root < 0)
            throw InputError("unsupported datum: a reflection with delta = 1 has no real root restricting onto it");
        rs.reflections.push_back(r);
    }
    return rs;
}

}  // namespace symhecke
