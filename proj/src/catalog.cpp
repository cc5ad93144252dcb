#include "symhecke/catalog.hpp"

#include "symhecke/oracle.hpp"

#include <boost/crc.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace symhecke {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

IntMat matrix_field(const json& j, const char* key)
{
    if (!j.contains(key)) throw InputError(std::string("schema violation: missing key '") + key + "'");
    const json& m = j.at(key);
    if (!m.is_array()) throw InputError(std::string("schema violation: '") + key + "' must be an array of integer rows");
    std::vector<IntVec> rows;
    for (const json& r : m) {
        if (!r.is_array()) throw InputError(std::string("schema violation: '") + key + "' rows must be arrays");
        IntVec row;
        for (const json& x : r) {
            if (!x.is_number_integer()) throw InputError(std::string("schema violation: '") + key + "' entries must be integers");
            row.push_back(x.get<Int>());
        }
        rows.push_back(std::move(row));
    }
    try {
        return IntMat::from_rows(rows);
    } catch (const std::invalid_argument&) {
        throw InputError(std::string("schema violation: '") + key + "' is ragged");
    }
}

std::vector<int> int_list(const json& j, const std::string& key)
{
    if (!j.is_array()) throw InputError("schema violation: '" + key + "' must be an array of integers");
    std::vector<int> out;
    for (const json& x : j) {
        if (!x.is_number_integer()) throw InputError("schema violation: '" + key + "' entries must be integers");
        out.push_back(x.get<int>());
    }
    return out;
}

std::string vec_string(const IntVec& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

std::string words_of(const CoxeterGroup& G, const std::vector<int>& elems)
{
    std::string s;
    for (std::size_t i = 0; i < elems.size(); ++i) s += (i ? ", " : "") + G.word_string(elems[i]);
    return s.empty() ? "-" : s;
}

}  // namespace

CatalogEntry parse_entry(const std::string& json_text, const std::string& source)
{
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("schema violation: catalog entry must be an object");
    CatalogEntry e;
    e.source = source;
    if (!j.contains("name") || !j.at("name").is_string()) throw InputError("schema violation: missing string key 'name'");
    e.name = j.at("name").get<std::string>();
    e.cartan = matrix_field(j, "cartan_matrix");
    e.theta = matrix_field(j, "theta_on_costar_T");
    if (j.contains("kernel_N_mod2")) {
        const json& n = j.at("kernel_N_mod2");
        if (!n.is_array()) throw InputError("schema violation: 'kernel_N_mod2' must be an array of 0/1 vectors");
        for (const json& v : n) e.kernel_N.push_back(int_list(v, "kernel_N_mod2"));
    }
    if (j.contains("tau_on_I_gens")) e.tau = int_list(j.at("tau_on_I_gens"), "tau_on_I_gens");
    if (j.contains("notes")) {
        if (!j.at("notes").is_string()) throw InputError("schema violation: 'notes' must be a string");
        e.notes = j.at("notes").get<std::string>();
    }
    if (j.contains("expected")) {
        const json& x = j.at("expected");
        if (!x.is_object()) throw InputError("schema violation: 'expected' must be an object");
        if (x.contains("order_Wa")) e.expected.order_Wa = int_list(json::array({x.at("order_Wa")}), "order_Wa")[0];
        if (x.contains("deltas")) e.expected.deltas = int_list(x.at("deltas"), "deltas");
        if (x.contains("I_rank")) e.expected.I_rank = int_list(json::array({x.at("I_rank")}), "I_rank")[0];
        if (x.contains("W0_orders")) e.expected.W0_orders = int_list(x.at("W0_orders"), "W0_orders");
    }
    e.canonical = j.dump();
    boost::crc_32_type crc;
    crc.process_bytes(e.canonical.data(), e.canonical.size());
    e.input_hash = crc.checksum();
    return e;
}

CatalogEntry read_entry_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_entry(ss.str(), path);
}

std::vector<CatalogEntry> load_catalog(const std::string& dir)
{
    if (!fs::is_directory(dir)) throw InputError("catalog directory not found: " + dir);
    std::vector<CatalogEntry> out;
    for (const auto& f : fs::directory_iterator(dir))
        if (f.is_regular_file() && f.path().extension() == ".json") out.push_back(read_entry_file(f.path().string()));
    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
    return out;
}

CatalogEntry resolve_entry(const std::string& dir, const std::string& pair)
{
    if (fs::is_regular_file(pair)) return read_entry_file(pair);
    if (fs::is_directory(dir))
        for (const CatalogEntry& e : load_catalog(dir))
            if (e.name == pair) return e;
    throw InputError("unknown pair '" + pair + "'");
}

PairData build_pair(const CatalogEntry& e)
{
    return build_pair(make_datum(e.name, e.cartan, e.theta), e.kernel_N, e.tau);
}

std::string sigma_type(const PairData& P)
{
    const CoxeterGroup& G = P.W.group;
    const int r = G.num_generators();
    if (r == 0) return "empty";
    std::vector<std::vector<int>> m(r, std::vector<int>(r, 1));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (i != j) m[i][j] = G.order_of(G.multiply(G.generator(i), G.generator(j)));

    std::vector<int> comp(r, -1);
    std::vector<std::vector<int>> comps;
    for (int i = 0; i < r; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> stack{i}, members;
        comp[i] = int(comps.size());
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            members.push_back(a);
            for (int b = 0; b < r; ++b)
                if (b != a && m[a][b] >= 3 && comp[b] < 0) {
                    comp[b] = comp[i];
                    stack.push_back(b);
                }
        }
        std::sort(members.begin(), members.end());
        comps.push_back(members);
    }

    // restricted roots by component, through the reflection each one defines
    const RatMat Ginv = inverse(to_rat(P.rs.gram));
    std::vector<std::set<IntVec>> roots_of(comps.size());
    std::vector<CoxeterGroup> subs;
    if (comps.size() > 1)
        for (const auto& C : comps) {
            std::vector<IntMat> gens;
            for (int i : C) gens.push_back(G.matrix(G.generator(i)));
            subs.emplace_back(G.dim(), gens);
        }
    for (const IntVec& f : P.rs.sigma) {
        int w = P.W.refl_elem[P.rs.reflection_of(f)];
        std::size_t c = 0;
        while (c + 1 < comps.size() && subs[c].find(G.matrix(w)) < 0) ++c;
        roots_of[c].insert(f);
    }

    std::vector<std::string> names;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto& C = comps[c];
        const int n = int(C.size());
        int max_m = 2, fours = 0;
        std::vector<int> degree(n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                int mm = m[C[a]][C[b]];
                max_m = std::max(max_m, mm);
                if (mm >= 3) ++degree[a];
                if (mm == 4 && a < b) ++fours;
            }
        bool nonreduced = false;
        for (const IntVec& f : roots_of[c]) {
            IntVec twice = f;
            for (Int& x : twice) x *= 2;
            if (roots_of[c].count(twice)) nonreduced = true;
        }
        std::string name;
        if (n == 1) {
            name = nonreduced ? "BC1" : "A1";
        } else if (max_m == 6 && n == 2) {
            name = "G2";
        } else if (max_m >= 5) {
            name = (n == 2 ? "I2(" + std::to_string(max_m) + ")" : "H" + std::to_string(n));
        } else if (fours == 1) {
            bool middle = false;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (m[C[a]][C[b]] == 4 && degree[a] == 2 && degree[b] == 2) middle = true;
            if (middle && n == 4) {
                name = "F4";
            } else if (nonreduced) {
                name = "BC" + std::to_string(n);
            } else if (n == 2) {
                name = "C2";
            } else {
                Rat longest = 0;
                std::vector<Rat> norms;
                for (const IntVec& f : roots_of[c]) {
                    RatVec fv = to_rat(f);
                    norms.push_back(dot(fv, Ginv * fv));
                    longest = std::max(longest, norms.back());
                }
                long long n_long = std::count(norms.begin(), norms.end(), longest);
                name = (n_long == 2 * n ? "C" : "B") + std::to_string(n);
            }
        } else {
            int branch = -1;
            for (int a = 0; a < n; ++a)
                if (degree[a] == 3) branch = a;
            if (branch < 0) {
                name = "A" + std::to_string(n);
            } else {
                std::vector<int> arms;
                for (int b = 0; b < n; ++b) {
                    if (b == branch || m[C[branch]][C[b]] < 3) continue;
                    int len = 1, prev = branch, cur = b;
                    while (true) {
                        int next = -1;
                        for (int x = 0; x < n; ++x)
                            if (x != prev && x != cur && m[C[cur]][C[x]] >= 3) next = x;
                        if (next < 0) break;
                        prev = cur;
                        cur = next;
                        ++len;
                    }
                    arms.push_back(len);
                }
                std::sort(arms.begin(), arms.end());
                if (arms[0] == 1 && arms[1] == 1)
                    name = "D" + std::to_string(n);
                else
                    name = "E" + std::to_string(n);
            }
        }
        names.push_back(name);
    }
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? " x " : "") + names[i];
    return out;
}

std::string chi_string(const Character& chi)
{
    std::string s = "(";
    for (std::size_t i = 0; i < chi.signs.size(); ++i) s += std::string(i ? "," : "") + (chi.signs[i] > 0 ? "+" : "-");
    return s + ")";
}

Character parse_chi(const std::string& text, int rank)
{
    std::vector<int> signs;
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '[' && c != ']' && c != '(' && c != ')') t += c;
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "+" || tok == "+1" || tok == "1")
            signs.push_back(1);
        else if (tok == "-" || tok == "-1")
            signs.push_back(-1);
        else
            throw InputError("malformed character value '" + tok + "' (use +1 or -1)");
    }
    if (int(signs.size()) != rank)
        throw InputError("character has " + std::to_string(signs.size()) + " values but I has rank " + std::to_string(rank));
    return Character::from_signs(signs);
}

std::string describe(const CatalogEntry& e, const PairData& P)
{
    std::ostringstream os;
    const CoxeterGroup& G = P.W.group;
    os << e.name << "\n";
    if (!e.notes.empty()) os << "  " << e.notes << "\n";
    os << "  rank X_*(T) " << P.datum.rank_T << ", rank X_*(A) " << P.rs.rank_A << "\n";
    os << "  roots " << P.datum.roots.size() << ": real " << P.rs.n_real << ", imaginary " << P.rs.n_imaginary << ", complex "
       << P.rs.n_complex << "\n";
    if (P.rs.rank_A > 0) {
        os << "  X_*(A) basis:";
        for (int i = 0; i < P.rs.lattice_A.rows(); ++i) os << " " << vec_string(P.rs.lattice_A.row(i));
        os << "\n";
    }
    os << "  Sigma " << sigma_type(P) << ", " << P.rs.sigma.size() << " restricted roots\n";
    for (std::size_t k = 0; k < P.rs.sigma.size(); ++k) os << "    " << vec_string(P.rs.sigma[k]) << "  multiplicity " << P.rs.multiplicity[k] << "\n";
    os << "  little Weyl group: order " << G.size();
    std::vector<int> deg = degrees(G);
    if (!deg.empty()) {
        os << ", degrees";
        for (int d : deg) os << " " << d;
    }
    os << "\n  delta table:\n";
    for (std::size_t r = 0; r < P.rs.reflections.size(); ++r) {
        const ReflectionData& R = P.rs.reflections[r];
        int w = P.W.refl_elem[r];
        auto it = std::find(P.W.simple.begin(), P.W.simple.end(), int(r));
        os << "    " << std::setw(12) << std::left << G.word_string(w) << std::right << " delta " << R.delta;
        if (it != P.W.simple.end()) os << "  simple s" << (it - P.W.simple.begin() + 1);
        if (R.real_root >= 0) os << "  alpha_s = " << root_name(P.datum, R.real_root);
        if (!R.has_real) os << "  no real root";
        os << "\n";
    }
    os << "  I = (Z/2)^" << P.G.rank;
    if (P.G.rank > 0) {
        os << ", basis:";
        for (int c : P.G.basis_cols) os << " " << vec_string(P.rs.lattice_A.row(c)) << "(-1)";
    }
    int i0 = int(P.G.I0_basis.size());
    os << "\n  I0 = (Z/2)^" << i0 << ", tau";
    for (int t : P.G.tau) os << " " << (t > 0 ? "+1" : "-1");
    os << "\n  characters (" << (1 << P.G.rank) << "):\n";
    for (const Character& chi : P.G.characters()) {
        W0Data w0 = coxeter_sub_W0(P.W, P.rs, P.G, chi);
        os << "    " << chi_string(chi) << "  |W_chi| " << stabilizer(P.W, P.G, chi).size() << "  |W0| " << w0.order()
           << "  S_chi {" << words_of(G, w0.simple) << "}  q (";
        for (std::size_t i = 0; i < w0.params.size(); ++i) os << (i ? "," : "") << w0.params[i];
        os << ")\n";
    }
    return os.str();
}

ordered_json module_json(const PairData& P, const Character& chi)
{
    const CoxeterGroup& G = P.W.group;
    MonodromyRep rep = build_lambda(P, chi);
    ordered_json doc;
    doc["pair"] = P.datum.name;
    doc["chi"] = chi.signs;
    ordered_json ib = ordered_json::array();
    for (int c : P.G.basis_cols) ib.push_back(P.rs.lattice_A.row(c));
    doc["I_basis"] = ib;
    ordered_json order = ordered_json::array();
    for (int w = 0; w < G.size(); ++w) order.push_back(G.word_string(w));
    doc["basis_order"] = order;
    ordered_json lam = ordered_json::object();
    for (int i = 0; i < P.num_simple(); ++i) lam["s" + std::to_string(i + 1)] = rep.lambda[i].to_dense().to_rows();
    doc["lambda"] = lam;
    ordered_json ia = ordered_json::object();
    for (int j = 0; j < P.G.rank; ++j) ia["u" + std::to_string(j + 1)] = rep.i_action[j];
    doc["I_action"] = ia;
    if (chi.trivial()) {
        HeckeRing H1 = hecke_chi1(P);
        std::vector<SparseMat> mu = build_mu_chi1(P, H1);
        ordered_json m = ordered_json::object();
        for (int i = 0; i < P.num_simple(); ++i) m["s" + std::to_string(i + 1)] = mu[i].to_dense().to_rows();
        doc["mu"] = m;
    } else {
        doc["mu"] = nullptr;
    }
    ordered_json w0;
    w0["order"] = rep.w0.order();
    ordered_json ss = ordered_json::array();
    for (int t : rep.w0.simple) ss.push_back(G.word_string(t));
    w0["simple_system"] = ss;
    w0["parameters"] = rep.w0.params;
    doc["W0"] = w0;
    return doc;
}

ParsedModule parse_module(const ordered_json& doc)
{
    ParsedModule out;
    auto mat = [](const ordered_json& m) {
        std::vector<IntVec> rows;
        for (const auto& r : m) rows.push_back(r.get<IntVec>());
        return IntMat::from_rows(rows);
    };
    for (const auto& [k, v] : doc.at("lambda").items()) out.lambda.push_back(mat(v));
    for (const auto& [k, v] : doc.at("I_action").items()) out.i_action.push_back(v.get<std::vector<int>>());
    if (!doc.at("mu").is_null()) {
        out.mu.emplace();
        for (const auto& [k, v] : doc.at("mu").items()) out.mu->push_back(mat(v));
    }
    return out;
}

namespace {

CheckResult root_datum_checks_restriction(const PairData& P)
{
    CheckResult r("restriction symmetry");
    const RootDatum& d = P.datum;
    for (std::size_t a = 0; a < d.roots.size(); ++a) {
        if (P.rs.root_class[a] == RootClass::Imaginary) continue;
        IntVec t = d.theta_root(d.roots[a]);
        for (Int& x : t) x = -x;
        int b = d.find_root(t);
        ++r.cases;
        if (b < 0 || P.rs.restriction[a] != P.rs.restriction[b]) r.fail(root_name(d, int(a)) + " and -theta of it restrict differently");
    }
    return r;
}

CheckResult multiplicity_checks(const PairData& P)
{
    CheckResult r("multiplicities");
    int total = 0;
    for (int m : P.rs.multiplicity) total += m;
    ++r.cases;
    if (total != P.rs.n_real + P.rs.n_complex) r.fail("sum of multiplicities differs from |Phi_r| + |Phi_c|");
    for (std::size_t a = 0; a < P.datum.roots.size(); ++a)
        if (P.rs.root_class[a] == RootClass::Complex) {
            ++r.cases;
            if (P.rs.multiplicity[P.rs.sigma_of_root[a]] < 2) r.fail("restricted root of complex " + root_name(P.datum, int(a)) + " has multiplicity 1");
        }
    for (const ReflectionData& R : P.rs.reflections) {
        ++r.cases;
        if (R.delta < 1) r.fail("non-positive delta");
        if (!R.has_real && R.delta < 2) r.fail("reflection without real root has delta < 2");
        if (R.delta == 1) {
            bool ok = R.phi_s.size() == 2 && R.real_root >= 0;
            for (int a : R.phi_s) ok = ok && P.rs.root_class[a] == RootClass::Real;
            if (!ok) r.fail("delta = 1 but Phi_s is not a pair of real roots");
        }
    }
    return r;
}

CheckResult delta_conjugation(const PairData& P)
{
    CheckResult r("delta conjugation invariance");
    const CoxeterGroup& G = P.W.group;
    for (int w = 0; w < G.size(); ++w)
        for (std::size_t t = 0; t < P.rs.reflections.size(); ++t) {
            int c = G.multiply(G.multiply(w, P.W.refl_elem[t]), G.inverse(w));
            ++r.cases;
            if (P.W.delta_of_element(c) != P.rs.reflections[t].delta) {
                r.fail("delta changes under conjugation by " + G.word_string(w));
                return r;
            }
        }
    return r;
}

CheckResult sigma_closed(const PairData& P)
{
    CheckResult r("Sigma closed under reflections");
    std::set<IntVec> sigma(P.rs.sigma.begin(), P.rs.sigma.end());
    for (const ReflectionData& R : P.rs.reflections)
        for (const IntVec& f : P.rs.sigma) {
            IntVec g = R.matrix.transpose() * f;
            ++r.cases;
            if (!sigma.count(g)) r.fail("reflection image " + vec_string(g) + " of a restricted root is not restricted root");
        }
    return r;
}

CheckResult weyl_structure(const PairData& P)
{
    CheckResult r("little Weyl group structure");
    const CoxeterGroup& G = P.W.group;
    std::vector<int> deg = degrees(G);
    long long prod = 1;
    for (int d : deg) prod *= d;
    ++r.cases;
    if (deg.empty() || prod != G.size()) r.fail("order is not the product of the degrees");
    for (int i = 0; i < G.num_generators(); ++i) {
        const IntMat& M = G.matrix(G.generator(i));
        ++r.cases;
        if (M.transpose() * P.W.gram * M != P.W.gram) r.fail("generator " + std::to_string(i + 1) + " is not orthogonal for the form");
    }
    for (int w = 0; w < G.size(); ++w) {
        ++r.cases;
        if (P.W.separating(P.W.chamber_point, G.matrix(w) * P.W.chamber_point) != G.length(w)) {
            r.fail("length of " + G.word_string(w) + " differs from its inversion count");
            break;
        }
    }
    return r;
}

CheckResult bruhat_graded(const PairData& P)
{
    CheckResult r("Bruhat order graded");
    const CoxeterGroup& G = P.W.group;
    const auto& rows = G.bruhat_rows();
    for (int b = 0; b < G.size(); ++b) {
        ++r.cases;
        if (!bit_test(rows[b], 0)) r.fail("identity is not below " + G.word_string(b));
        for (int a = 0; a < G.size(); ++a)
            if (a != b && bit_test(rows[b], a) && G.length(a) >= G.length(b)) {
                r.fail(G.word_string(a) + " < " + G.word_string(b) + " without a length increase");
                return r;
            }
    }
    return r;
}

CheckResult real_subgroup_normal(const PairData& P)
{
    CheckResult r("W_r normal in W_a");
    const CoxeterGroup& G = P.W.group;
    std::vector<int> gens;
    for (std::size_t t = 0; t < P.rs.reflections.size(); ++t)
        if (P.rs.reflections[t].has_real) gens.push_back(P.W.refl_elem[t]);
    std::vector<char> in(G.size(), 0);
    std::vector<int> elems{0};
    in[0] = 1;
    for (std::size_t k = 0; k < elems.size(); ++k)
        for (int g : gens) {
            int x = G.multiply(elems[k], g);
            if (!in[x]) {
                in[x] = 1;
                elems.push_back(x);
            }
        }
    ++r.cases;
    if (G.size() % int(elems.size()) != 0) r.fail("|W_r| does not divide |W_a|");
    for (int i = 0; i < G.num_generators(); ++i)
        for (int x : elems) {
            int s = G.generator(i);
            ++r.cases;
            if (!in[G.multiply(G.multiply(s, x), s)]) {
                r.fail("W_r is not stable under conjugation by s" + std::to_string(i + 1));
                return r;
            }
        }
    r.detail = "|W_r| = " + std::to_string(elems.size()) + ", index " + std::to_string(G.size() / int(elems.size()));
    return r;
}

CheckResult bruhat_values(const PairData& P, const VerifyOptions& opt)
{
    CheckResult r("Bruhat-monotone critical values");
    BruhatValueReport b = check_bruhat_values(P.W, opt.trials, opt.seed);
    r.cases = b.comparisons;
    if (b.failures > 0) r.fail(std::to_string(b.failures) + " of " + std::to_string(b.trials) + " trials failed; " + b.witness);
    if (r.pass) r.detail = std::to_string(b.passes) + "/" + std::to_string(b.trials) + " trials";
    return r;
}

CheckResult component_checks(const PairData& P)
{
    CheckResult r("component group structure");
    const ComponentGroup& C = P.G;
    const CoxeterGroup& G = P.W.group;
    for (std::size_t a = 0; a < P.datum.roots.size(); ++a) {
        if (P.rs.root_class[a] != RootClass::Real || !P.rs.positive[a]) continue;
        int w = P.W.refl_elem[P.rs.reflection_of(P.rs.restriction[a])];
        IntVec cor = P.rs.coords_in_A(P.datum.coroots[a]);
        F2 cmask = 0;
        for (int j = 0; j < C.ambient_dim; ++j)
            if (cor[j] & 1) cmask |= F2(1) << j;
        for (int j = 0; j < C.ambient_dim; ++j) {
            F2 expect = (F2(1) << j) ^ ((P.rs.restriction[a][j] & 1) ? cmask : 0);
            ++r.cases;
            if (C.act_ambient(w, F2(1) << j) != expect) r.fail("reflection formula fails for " + root_name(P.datum, int(a)));
        }
    }
    for (std::size_t t = 0; t < P.rs.reflections.size(); ++t) {
        if (P.rs.reflections[t].has_real) continue;
        for (int j = 0; j < C.rank; ++j) {
            ++r.cases;
            if (C.act(P.W.refl_elem[t], F2(1) << j) != (F2(1) << j)) r.fail("reflection " + G.word_string(P.W.refl_elem[t]) + " without real root acts on I");
        }
    }
    std::vector<F2> span;
    for (F2 u : C.I_s) {
        ++r.cases;
        if (!C.in_I0(u)) r.fail("some I_s is not inside I0");
        span.push_back(u);
    }
    F2 pivot[32] = {};
    std::size_t span_rank = 0;
    for (F2 v : span) {
        for (int b = 31; b >= 0 && v; --b) {
            if (!((v >> b) & 1)) continue;
            if (!pivot[b]) {
                pivot[b] = v;
                ++span_rank;
                v = 0;
            } else {
                v ^= pivot[b];
            }
        }
    }
    ++r.cases;
    if (span_rank != C.I0_basis.size()) r.fail("the I_s do not span I0");
    return r;
}

CheckResult w0_checks(const PairData& P, const Character& chi, const W0Data& w0)
{
    CheckResult r("W0 criteria");
    const CoxeterGroup& G = P.W.group;
    std::vector<int> stab = stabilizer(P.W, P.G, chi);
    std::vector<char> in_stab(G.size(), 0);
    for (int w : stab) in_stab[w] = 1;
    for (int w : w0.elements) {
        ++r.cases;
        if (!in_stab[w]) r.fail(G.word_string(w) + " lies in W0 but not in the stabilizer");
    }
    for (std::size_t t = 0; t < P.rs.reflections.size(); ++t) {
        int w = P.W.refl_elem[t];
        bool in_w0 = w0.member[w] >= 0;
        ++r.cases;
        if (in_w0 != (chi(P.G.I_s[t]) == 1)) r.fail("membership of " + G.word_string(w) + " in W0 disagrees with chi on I_s");
        int a = P.rs.reflections[t].real_root;
        if (P.rs.reflections[t].delta == 1 && chi(P.G.coroot_class(P.datum, P.rs, a)) == 1 && !in_stab[w])
            r.fail("real reflection " + G.word_string(w) + " with chi = 1 on its coroot is outside the stabilizer");
    }
    for (int i = 0; i < P.num_simple(); ++i) {
        ++r.cases;
        bool in_w0 = w0.member[G.generator(i)] >= 0;
        if ((splitting_cocycle(P.W, P.G, i, chi) == 1) != in_w0) r.fail("cocycle criterion fails for s" + std::to_string(i + 1));
    }
    r.detail = "|W_chi| = " + std::to_string(stab.size()) + ", |W0| = " + std::to_string(w0.order());
    return r;
}

CheckResult character_conjugation(const PairData& P, const std::vector<Character>& chars, const std::vector<W0Data>& w0s)
{
    CheckResult r("character conjugation");
    const CoxeterGroup& G = P.W.group;
    std::map<F2, int> by_mask;
    for (std::size_t c = 0; c < chars.size(); ++c) by_mask[chars[c].mask] = int(c);
    for (std::size_t c = 0; c < chars.size(); ++c)
        for (int w = 0; w < G.size(); ++w) {
            const W0Data& moved = w0s[by_mask.at(P.G.act_character(P.W, w, chars[c]).mask)];
            for (int s : P.W.refl_elem) {
                int conj = G.multiply(G.multiply(G.inverse(w), s), w);
                ++r.cases;
                if ((w0s[c].member[conj] >= 0) != (moved.member[s] >= 0)) {
                    r.fail("fails for chi " + chi_string(chars[c]) + ", w = " + G.word_string(w) + ", s = " + G.word_string(s));
                    return r;
                }
            }
        }
    return r;
}

std::vector<CheckResult> hecke_checks(const W0Data& w0, const VerifyOptions& opt)
{
    std::vector<CheckResult> out;
    HeckeRing H(std::make_shared<CoxeterGroup>(w0.group), w0.params);
    RegularReps reps = regular_reps(H);
    const CoxeterGroup& G = H.group();
    out.push_back(check_braid_relations(G, reps.L, "Hecke braid relations (left)"));
    out.push_back(check_braid_relations(G, reps.R, "Hecke braid relations (right)"));
    out.push_back(check_quadratic(reps.L, w0.params, "Hecke quadratic relations (left)"));
    out.push_back(check_quadratic(reps.R, w0.params, "Hecke quadratic relations (right)"));
    CheckResult lr("Hecke left/right commute");
    for (std::size_t i = 0; i < reps.L.size(); ++i)
        for (std::size_t j = 0; j < reps.R.size(); ++j) {
            ++lr.cases;
            if (reps.L[i] * reps.R[j] != reps.R[j] * reps.L[i]) lr.fail("L(T_" + std::to_string(i + 1) + ") and R(T_" + std::to_string(j + 1) + ") do not commute");
        }
    out.push_back(lr);
    CheckResult as("Hecke associativity");
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> pick(0, G.size() - 1);
    for (int t = 0; t < 50; ++t) {
        int x = pick(rng), y = pick(rng), z = pick(rng);
        auto X = HeckeRing::basis(x), Y = HeckeRing::basis(y), Z = HeckeRing::basis(z);
        ++as.cases;
        if (H.multiply(X, H.multiply(Y, Z)) != H.multiply(H.multiply(X, Y), Z))
            as.fail("(T_x T_y) T_z != T_x (T_y T_z) for x = " + G.word_string(x) + ", y = " + G.word_string(y) + ", z = " + G.word_string(z));
    }
    out.push_back(as);
    if (w0.order() <= opt.quotient_max_order) {
        out.push_back(oracle::free_algebra_quotient(H));
    } else {
        CheckResult q("free-algebra quotient");
        q.skipped = true;
        q.detail = "|W0| > " + std::to_string(opt.quotient_max_order);
        out.push_back(q);
    }
    return out;
}

CheckResult round_trip(const PairData& P, const Character& chi, const MonodromyRep& rep)
{
    CheckResult r("module round trip");
    ordered_json doc = module_json(P, chi);
    ParsedModule back = parse_module(ordered_json::parse(doc.dump()));
    ++r.cases;
    if (back.lambda.size() != rep.lambda.size()) {
        r.fail("wrong number of lambda matrices");
        return r;
    }
    for (std::size_t i = 0; i < rep.lambda.size(); ++i) {
        ++r.cases;
        if (back.lambda[i] != rep.lambda[i].to_dense()) r.fail("lambda(s" + std::to_string(i + 1) + ") does not survive the round trip");
    }
    ++r.cases;
    if (back.i_action != rep.i_action) r.fail("I action does not survive the round trip");
    if (rep.mu) {
        ++r.cases;
        if (!back.mu || back.mu->size() != rep.mu->size()) {
            r.fail("mu missing after the round trip");
        } else {
            for (std::size_t i = 0; i < rep.mu->size(); ++i)
                if ((*back.mu)[i] != (*rep.mu)[i].to_dense()) r.fail("mu does not survive the round trip");
        }
    }
    return r;
}

std::vector<CheckResult> character_checks(const PairData& P, const Character& chi, const VerifyOptions& opt)
{
    std::vector<CheckResult> out;
    MonodromyRep rep = build_lambda(P, chi);
    out.push_back(w0_checks(P, chi, rep.w0));
    for (CheckResult& h : hecke_checks(rep.w0, opt)) out.push_back(std::move(h));
    out.push_back(check_braid_relations(P.W.group, rep.lambda, "lambda braid relations"));
    out.push_back(check_block_relations(P, rep));
    out.push_back(check_block_permutation(P, rep));
    out.push_back(check_semidirect(P, rep));
    out.push_back(check_matsumoto(P, rep, opt.matsumoto_elements));
    out.push_back(verify_v0_hecke(P, rep).result);
    out.push_back(verify_factorization(P, rep));
    if (P.W.size() <= opt.induced_max_order) {
        out.push_back(oracle::compare_induced(P, rep).result);
    } else {
        CheckResult c("induced-module oracle");
        c.skipped = true;
        c.detail = "|W_a| > " + std::to_string(opt.induced_max_order);
        out.push_back(c);
    }
    if (chi.trivial()) {
        HeckeRing H1 = hecke_chi1(P);
        rep.mu = build_mu_chi1(P, H1);
        out.push_back(check_mu_chi1(P, rep, H1));
        bool tau_trivial = std::all_of(P.G.tau.begin(), P.G.tau.end(), [](int t) { return t == 1; });
        if (tau_trivial) {
            out.push_back(fundamental_class_check(P, rep));
        } else {
            CheckResult f("fundamental class");
            f.skipped = true;
            f.detail = "tau is nontrivial";
            out.push_back(f);
        }
        out.push_back(check_cyclicity(P, rep));
    }
    out.push_back(quadratic_relation_check(P, rep));
    out.push_back(round_trip(P, chi, rep));
    return out;
}

CheckResult expected_values(const CatalogEntry& e, const PairData& P, const std::vector<W0Data>& w0s)
{
    CheckResult r("expected values");
    const Expected& x = e.expected;
    if (x.order_Wa) {
        ++r.cases;
        if (*x.order_Wa != P.W.size()) r.fail("order_Wa " + std::to_string(P.W.size()) + ", expected " + std::to_string(*x.order_Wa));
    }
    if (x.deltas) {
        std::vector<int> d;
        for (int i = 0; i < P.num_simple(); ++i) d.push_back(P.delta(i));
        ++r.cases;
        if (*x.deltas != d) r.fail("deltas differ from the expected values");
    }
    if (x.I_rank) {
        ++r.cases;
        if (*x.I_rank != P.G.rank) r.fail("I_rank " + std::to_string(P.G.rank) + ", expected " + std::to_string(*x.I_rank));
    }
    if (x.W0_orders) {
        std::vector<int> o;
        for (const W0Data& w : w0s) o.push_back(w.order());
        ++r.cases;
        if (*x.W0_orders != o) r.fail("W0 orders differ from the expected values");
    }
    if (r.cases == 0) r.skipped = true;
    return r;
}

CheckResult guarded(const std::string& name, const std::function<CheckResult()>& f)
{
    try {
        return f();
    } catch (const std::exception& ex) {
        CheckResult r(name);
        r.fail(std::string("exception: ") + ex.what());
        return r;
    }
}

}  // namespace

PairReport verify_pair(const CatalogEntry& e, const VerifyOptions& opt)
{
    PairReport rep;
    rep.pair = e.name;
    rep.input_hash = e.input_hash;
    PairData P = build_pair(e);

    auto add = [&](const std::string& scope, CheckResult c) {
        if (!c.pass) rep.pass = false;
        rep.checks.push_back({scope, std::move(c)});
    };
    add("pair", guarded("restriction symmetry", [&] { return root_datum_checks_restriction(P); }));
    add("pair", guarded("multiplicities", [&] { return multiplicity_checks(P); }));
    add("pair", guarded("delta conjugation invariance", [&] { return delta_conjugation(P); }));
    add("pair", guarded("Sigma closed under reflections", [&] { return sigma_closed(P); }));
    add("pair", guarded("little Weyl group structure", [&] { return weyl_structure(P); }));
    add("pair", guarded("Bruhat order graded", [&] { return bruhat_graded(P); }));
    add("pair", guarded("W_r normal in W_a", [&] { return real_subgroup_normal(P); }));
    add("pair", guarded("Bruhat-monotone critical values", [&] { return bruhat_values(P, opt); }));
    add("pair", guarded("component group structure", [&] { return component_checks(P); }));

    std::vector<Character> chars = P.G.characters();
    std::vector<W0Data> w0s(chars.size());
    for (std::size_t c = 0; c < chars.size(); ++c) w0s[c] = coxeter_sub_W0(P.W, P.rs, P.G, chars[c]);
    add("pair", guarded("character conjugation", [&] { return character_conjugation(P, chars, w0s); }));
    add("pair", guarded("expected values", [&] { return expected_values(e, P, w0s); }));

    std::vector<std::vector<CheckResult>> per_chi(chars.size());
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < int(chars.size()); ++c) {
        try {
            per_chi[c] = character_checks(P, chars[c], opt);
        } catch (const std::exception& ex) {
            CheckResult r("character checks");
            r.fail(std::string("exception: ") + ex.what());
            per_chi[c] = {r};
        }
    }
    for (std::size_t c = 0; c < chars.size(); ++c)
        for (CheckResult& r : per_chi[c]) add("chi " + chi_string(chars[c]), std::move(r));
    return rep;
}

ordered_json report_json(const std::vector<PairReport>& reports, const VerifyOptions& opt)
{
    ordered_json doc;
    doc["tool"] = "symhecke";
    doc["version"] = kToolVersion;
    doc["seed"] = opt.seed;
    doc["trials"] = opt.trials;
    bool all = true;
    ordered_json pairs = ordered_json::array();
    for (const PairReport& p : reports) {
        ordered_json pj;
        pj["pair"] = p.pair;
        std::ostringstream h;
        h << std::hex << std::setw(8) << std::setfill('0') << p.input_hash;
        pj["input_hash"] = h.str();
        pj["pass"] = p.pass;
        ordered_json checks = ordered_json::array();
        for (const ScopedCheck& c : p.checks) {
            ordered_json cj;
            cj["scope"] = c.scope;
            cj["name"] = c.check.name;
            cj["status"] = c.check.skipped ? "skipped" : (c.check.pass ? "pass" : "fail");
            cj["cases"] = c.check.cases;
            if (!c.check.detail.empty()) cj[c.check.pass ? "detail" : "witness"] = c.check.detail;
            checks.push_back(cj);
        }
        pj["checks"] = checks;
        pairs.push_back(pj);
        all = all && p.pass;
    }
    doc["pairs"] = pairs;
    doc["pass"] = all;
    return doc;
}

}  // namespace symhecke
