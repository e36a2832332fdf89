/* Copyright 2026 The hopfpeak Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
 // Verbs dispatch through a per-algebra backend: basis names, conversions,
 // the structural Hopf algebra, Theta, the odd basis, a canonical character
 // and the verification suites.

#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "hopfpeak/characters.hpp"
#include "hopfpeak/dsym.hpp"
#include "hopfpeak/io.hpp"
#include "hopfpeak/nsym.hpp"
#include "hopfpeak/qsym.hpp"
#include "hopfpeak/ssym.hpp"
#include "hopfpeak/sym.hpp"
#include "hopfpeak/vhopf.hpp"

namespace hopfpeak::cli {

namespace {

using io::Json;

struct Options {
    std::string verb;
    std::string algebra = "qsym";
    std::string basis;
    std::string to;
    int degree = -1;
    std::string constructor = "default";
    std::vector<std::string> elements;
    std::string out;
    std::string suite = "all";
    std::string which;
    std::string map = "theta";
    std::string character;
};

struct Output {
    std::string text;
    int code = 0;
};

// A user constructor that fails validation.
struct Rejected {
    Report report;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io::FormatError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json load_json(const std::string& arg) {
    std::string text = !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg;
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw io::FormatError("invalid JSON in '" + arg + "': " + e.what());
    }
}

int degree_of(const Options& o) { return o.degree >= 0 ? o.degree : degree_cap(); }

std::string dump(const Json& j) { return j.dump() + "\n"; }

template <class K>
struct Backend {
    std::string name;
    std::string default_basis;
    std::function<BasisTag(std::string_view)> tag_for;
    std::function<Element<K>(const Element<K>&, std::string_view)> convert;
    std::function<const HopfAlgebra<K>&(const BasisTag&)> structure;
    std::function<Element<K>(const Element<K>&)> theta;
    std::function<std::vector<Element<K>>(int)> odd_basis;
    std::function<const Character<K>*()> character;
    std::vector<std::pair<std::string, std::function<Report(int)>>> suites;
    // Overrides the generic matrix of Theta on the structural basis.
    std::function<std::string(int)> theta_table;
};

template <class K>
Element<K> to_structure(const Backend<K>& b, const Element<K>& a) {
    return b.convert(a, b.structure(a.tag()).tag().basis);
}

template <class K>
Element<K> read_element(const Backend<K>& b, const std::string& arg, const std::string& basis_flag) {
    Json j = load_json(arg);
    std::string in_json = io::basis_in_json(j), alg = io::algebra_in_json(j);
    if (!basis_flag.empty() && !in_json.empty() && basis_flag != in_json)
        throw io::FormatError("--basis " + basis_flag + " contradicts element basis " + in_json);
    std::string basis = !basis_flag.empty() ? basis_flag : (!in_json.empty() ? in_json : b.default_basis);
    BasisTag tag = b.tag_for(basis);
    if (!alg.empty() && alg != tag.algebra)
        throw io::FormatError("element algebra " + alg + " does not match " + tag.algebra);
    return io::element_from_json<K>(j, tag);
}

template <class K>
Tensor<K> convert_tensor(const Backend<K>& b, const Tensor<K>& t, std::string_view basis) {
    Tensor<K> out(b.tag_for(basis));
    for (const auto& [kk, c] : t) {
        auto l = b.convert(Element<K>(t.tag(), kk.first), basis);
        auto r = b.convert(Element<K>(t.tag(), kk.second), basis);
        for (const auto& [kl, cl] : l)
            for (const auto& [kr, cr] : r) out.add_term({kl, kr}, c * cl * cr);
    }
    return out;
}

template <class K>
const Character<K>& named_character(const Backend<K>& b, const std::string& name) {
    const Character<K>* z = b.character ? b.character() : nullptr;
    if (!z) throw std::invalid_argument("no canonical character on " + b.name);
    static std::map<std::pair<const void*, std::string>, std::unique_ptr<Character<K>>> derived;
    static std::mutex lock;
    if (name == "canonical") return *z;
    if (name != "odd" && name != "euler") throw std::invalid_argument("unknown character '" + name + "'");
    std::lock_guard<std::mutex> g(lock);
    auto& slot = derived[{z, name}];
    if (!slot) slot = std::make_unique<Character<K>>(name == "odd" ? odd_character(*z) : euler_character(*z));
    return *slot;
}

template <class K>
Report odd_suite(const Backend<K>& b, int n_max) {
    Report r("odd subalgebra of " + b.name);
    const auto& z = named_character(b, "canonical");
    const auto& h = z.algebra();
    auto psi = universal_psi(z);
    for (int n = 1; n <= n_max; ++n) {
        std::string where = "degree " + std::to_string(n);
        auto keys = h.basis(n);
        std::vector<Element<K>> basis;
        for (const auto& e : b.odd_basis(n)) basis.push_back(to_structure(b, e));
        RatMatrix span = coordinate_rows(basis, keys);
        r.record("odd basis independent", rank(span) == basis.size(), where);
        for (const auto& e : basis) {
            std::string w;
            bool ok = ds_check(z, e, &w);
            r.record("Dehn-Sommerville", ok, to_string(e) + ": " + w);
        }
        auto strategy = odd_subalgebra_basis(psi, n).all();
        r.record("strategy spans the odd basis", same_row_space(coordinate_rows(strategy, keys), span), where);
        for (const auto& k : keys)
            r.record("theta image in span",
                     in_row_space(span, coordinates(to_structure(b, b.theta(h.element(k))), keys)), to_string(k));
    }
    return r;
}

template <class K>
Report character_suite(const Backend<K>& b, int n_max) {
    Report r("characters of " + b.name);
    const auto& z = named_character(b, "canonical");
    r.merge(check_multiplicative(z, n_max), "canonical ");
    r.record("odd character is odd", is_odd(named_character(b, "odd"), n_max));
    auto psi = universal_psi(z);
    for (const auto& k : basis_up_to(z.algebra(), n_max))
        r.record("zeta_QSym.Psi = zeta", qsym_zeta()(psi.map().on_basis(k)) == z(k), to_string(k));
    return r;
}

template <class K>
void add_common_suites(Backend<K>& b) {
    b.suites.insert(b.suites.begin(), {"hopf-axioms", [&b](int n) {
                                           return check_hopf_axioms(b.structure(b.tag_for(b.default_basis)), n);
                                       }});
    if (b.character) b.suites.push_back({"character", [&b](int n) { return character_suite(b, n); }});
    if (b.odd_basis) b.suites.push_back({"odd", [&b](int n) { return odd_suite(b, n); }});
}

template <class K>
std::string theta_matrix_table(const Backend<K>& b, int n) {
    const auto& h = b.structure(b.tag_for(b.default_basis));
    auto keys = h.basis(n);
    RatMatrix m(keys.size(), keys.size());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        labels.push_back(to_string(keys[i]));
        auto img = to_structure(b, b.theta(h.element(keys[i])));
        for (std::size_t j = 0; j < keys.size(); ++j) m(i, j) = img.coeff(keys[j]);
    }
    return io::tsv(m, labels, labels);
}

template <class K>
Json suite_json(const Backend<K>& b, const std::string& suite, int n, bool& passed) {
    Json reports = Json::array();
    bool found = false;
    passed = true;
    for (const auto& [name, fn] : b.suites) {
        if (suite != "all" && suite != name) continue;
        found = true;
        Report r = fn(n);
        passed = passed && r.passed();
        Json j = io::report_json(r);
        j["suite"] = name;
        reports.push_back(j);
    }
    if (!found) {
        std::string known;
        for (const auto& s : b.suites) known += " " + s.first;
        throw std::invalid_argument("suite '" + suite + "' not available for " + b.name + "; known:" + known);
    }
    return Json{{"algebra", b.name}, {"degree", n}, {"passed", passed}, {"reports", reports}};
}

template <class K>
Output run_verb(const Backend<K>& b, const Options& o) {
    auto need = [&](std::size_t k) {
        if (o.elements.size() != k)
            throw io::FormatError(o.verb + " needs " + std::to_string(k) + " --element value(s)");
    };
    auto out_basis = [&](const Element<K>& in) { return o.to.empty() ? in.tag().basis : o.to; };

    if (o.verb == "expand") {
        need(1);
        if (o.to.empty()) throw io::FormatError("expand needs --to");
        return {dump(io::element_json(b.convert(read_element(b, o.elements[0], o.basis), o.to)))};
    }
    if (o.verb == "mul") {
        need(2);
        auto x = read_element(b, o.elements[0], o.basis), y = read_element(b, o.elements[1], o.basis);
        const auto& h = b.structure(x.tag());
        auto p = h.product(to_structure(b, x), to_structure(b, y));
        return {dump(io::element_json(b.convert(p, out_basis(x))))};
    }
    if (o.verb == "comul") {
        need(1);
        auto x = read_element(b, o.elements[0], o.basis);
        auto t = b.structure(x.tag()).coproduct(to_structure(b, x));
        return {dump(io::element_json(convert_tensor(b, t, out_basis(x))))};
    }
    if (o.verb == "antipode") {
        need(1);
        auto x = read_element(b, o.elements[0], o.basis);
        auto s = b.structure(x.tag()).antipode(to_structure(b, x));
        return {dump(io::element_json(b.convert(s, out_basis(x))))};
    }
    if (o.verb == "theta") {
        need(1);
        auto x = read_element(b, o.elements[0], o.basis);
        return {dump(io::element_json(b.convert(b.theta(x), out_basis(x))))};
    }
    if (o.verb == "pair") {
        if (!o.character.empty()) {
            need(1);
            auto x = read_element(b, o.elements[0], o.basis);
            const auto& z = named_character(b, o.character);
            return {dump(Json{{"character", o.character}, {"value", io::rational_json(z(to_structure(b, x)))}})};
        }
        need(2);
        auto x = read_element(b, o.elements[0], o.basis);
        auto d = dual_tag(x.tag());
        if (!d) throw std::invalid_argument("no dual basis registered for " + to_string(x.tag()));
        auto f = io::element_from_json<K>(load_json(o.elements[1]), *d);
        return {dump(Json{{"value", io::rational_json(pairing(f, x))}})};
    }
    if (o.verb == "odd-basis") {
        if (!b.odd_basis) throw std::invalid_argument("no odd basis for " + b.name);
        Json list = Json::array();
        for (const auto& e : b.odd_basis(degree_of(o)))
            list.push_back(io::element_json(o.to.empty() ? e : b.convert(e, o.to)));
        return {dump(list)};
    }
    if (o.verb == "verify") {
        bool passed = true;
        Json j = suite_json(b, o.suite, degree_of(o), passed);
        return {dump(j), passed ? 0 : 1};
    }
    if (o.verb == "table") {
        int n = degree_of(o);
        return {b.theta_table ? b.theta_table(n) : theta_matrix_table(b, n)};
    }
    throw io::FormatError("unknown verb '" + o.verb + "'");
}

// Theta maps on QSym, NSym, Sym and V accept "theta" or "phi".
template <class K>
void require_map(const Options& o, std::initializer_list<const char*> allowed, const std::string& alg) {
    for (const char* a : allowed)
        if (o.map == a) return;
    throw std::invalid_argument("map '" + o.map + "' not available for " + alg);
}

Output run_qsym(const Options& o) {
    require_map<Composition>(o, {"theta", "phi"}, "qsym");
    static Backend<Composition> b;
    b = Backend<Composition>{};
    b.name = "qsym";
    b.default_basis = "M";
    b.tag_for = [](std::string_view s) {
        for (const auto& t : {qsym::kM, qsym::kL, qsym::kS, qsym::kEta})
            if (t.basis == s) return t;
        throw std::invalid_argument("unknown QSym basis '" + std::string(s) + "'");
    };
    b.convert = [](const qsym::QSymElement& a, std::string_view s) { return qsym::convert(a, s); };
    b.structure = [](const BasisTag&) -> const HopfAlgebra<Composition>& { return qsym::algebra(); };
    bool phi = o.map == "phi";
    b.theta = [phi](const qsym::QSymElement& a) {
        return phi ? qsym::algebra().phi(qsym::to_M(a)) : qsym::theta(a);
    };
    b.odd_basis = [](int n) {
        std::vector<qsym::QSymElement> out;
        for (const auto& c : qsym::odd_compositions(n)) out.push_back(qsym::eta(c));
        return out;
    };
    b.character = [] { return &qsym_zeta(); };
    b.suites.push_back({"theta", [](int n) { return verify_theta(universal_psi(qsym_zeta()), qsym::theta_map(), n); }});
    add_common_suites(b);
    return run_verb(b, o);
}

Output run_nsym(const Options& o) {
    require_map<Composition>(o, {"theta", "phi"}, "nsym");
    static Backend<Composition> b;
    b = Backend<Composition>{};
    b.name = "nsym";
    b.default_basis = "H";
    b.tag_for = [](std::string_view s) {
        if (s == "H") return nsym::kH;
        if (s == "R") return nsym::kR;
        throw std::invalid_argument("unknown NSym basis '" + std::string(s) + "'");
    };
    b.convert = [](const nsym::NSymElement& a, std::string_view s) { return nsym::from_H(nsym::to_H(a), s); };
    b.structure = [](const BasisTag&) -> const HopfAlgebra<Composition>& { return nsym::algebra(); };
    bool phi = o.map == "phi";
    b.theta = [phi](const nsym::NSymElement& a) {
        return phi ? nsym::algebra().phi(nsym::to_H(a)) : nsym::theta(a);
    };
    b.suites.push_back({"theta", [](int n) {
                            Report r("NSym theta");
                            for (int k = 0; k <= n; ++k) {
                                std::size_t odd = qsym::odd_compositions(k).size();
                                RatMatrix m = map_matrix(nsym::theta_map(), compositions(k), compositions(k));
                                r.record("image dimension = odd compositions", rank(m) == odd, "degree " + std::to_string(k));
                                for (const auto& a : compositions(k))
                                    for (const auto& c : compositions(k))
                                        r.record("adjoint of Theta_QSym",
                                                 pairing(nsym::theta_map().on_basis(a), qsym::M(c)) ==
                                                     pairing(nsym::H(a), qsym::theta_map().on_basis(c)),
                                                 to_string(a) + ", " + to_string(c));
                            }
                            r.merge(check_hopf_morphism(nsym::algebra(), nsym::algebra(), nsym::theta_map(), n),
                                    "hopf ");
                            return r;
                        }});
    add_common_suites(b);
    return run_verb(b, o);
}

const Character<Partition>& sym_zeta() {
    static const Character<Partition> z(sym::algebra(), "canonical", [](const Partition& l) {
        return sym::zeta(sym::SymElement(sym::km, l));
    });
    return z;
}

Output run_sym(const Options& o) {
    require_map<Partition>(o, {"theta", "phi"}, "sym");
    static Backend<Partition> b;
    b = Backend<Partition>{};
    b.name = "sym";
    b.default_basis = "m";
    b.tag_for = [](std::string_view s) { return sym::tag_for(s); };
    b.convert = [](const sym::SymElement& a, std::string_view s) { return sym::convert(a, s); };
    b.structure = [](const BasisTag&) -> const HopfAlgebra<Partition>& { return sym::algebra(); };
    bool phi = o.map == "phi";
    b.theta = [phi](const sym::SymElement& a) { return phi ? sym::algebra().phi(sym::to_m(a)) : sym::theta(a); };
    b.character = [] { return &sym_zeta(); };
    b.suites.push_back({"theta", [](int n) { return verify_theta(universal_psi(sym_zeta()), sym::theta_map(), n); }});
    b.suites.push_back({"embedding", [](int n) {
                            return check_hopf_morphism(sym::algebra(), qsym::algebra(), sym::iota_map(), n, "iota");
                        }});
    add_common_suites(b);
    return run_verb(b, o);
}

// Owns a user constructor's Theta, or points at the default one.
struct ThetaHolder {
    std::unique_ptr<ssym::ThetaStar> owned;
    const ssym::ThetaStar* theta = nullptr;
};

ThetaHolder load_theta(const Options& o) {
    ThetaHolder h;
    if (o.constructor == "default") {
        h.theta = &ssym::default_theta();
        return h;
    }
    std::string path = !o.constructor.empty() && o.constructor[0] == '@' ? o.constructor.substr(1) : o.constructor;
    auto table = io::constructor_table_from_json(load_json("@" + path));
    std::map<std::pair<Permutation, Permutation>, Rational> values;
    for (const auto& [s, t, v] : table) values[{s, t}] = v;
    auto fn = [values](const Permutation& s, const Permutation& t) {
        auto it = values.find({s, t});
        return it == values.end() ? ssym::f_peak(s, t) : it->second;
    };
    auto c = ssym::ThetaConstructor::unchecked(fn, path);
    Report r = c.validate(std::max(degree_of(o), 3));
    if (!r.passed()) throw Rejected{r};
    h.owned = std::make_unique<ssym::ThetaStar>(c);
    h.theta = h.owned.get();
    return h;
}

Output run_ssym(const Options& o) {
    require_map<Permutation>(o, {"theta", "phi"}, "ssym");
    static ThetaHolder holder;
    holder = load_theta(o);
    const ssym::ThetaStar* t = holder.theta;
    static Backend<Permutation> b;
    b = Backend<Permutation>{};
    b.name = "ssym";
    b.default_basis = "F";
    b.tag_for = [](std::string_view s) { return ssym::tag_for(s); };
    b.convert = [](const ssym::SSymElement& a, std::string_view s) { return ssym::convert(a, s); };
    b.structure = [](const BasisTag& tag) -> const HopfAlgebra<Permutation>& {
        if (tag.algebra == ssym::kFs.algebra) return ssym::dual_algebra();
        return ssym::algebra();
    };
    bool phi = o.map == "phi";
    b.theta = [t, phi](const ssym::SSymElement& a) {
        if (phi) return ssym::algebra().phi(ssym::to_F(a));
        return a.tag().algebra == ssym::kFs.algebra ? t->apply_dual(a) : t->apply(a);
    };
    b.odd_basis = [](int n) { return ssym::odd_basis(n); };
    b.character = [] { return &ssym::zeta(); };
    b.suites.push_back({"theta", [t](int n) { return ssym::verify_ssym_theta(*t, n); }});
    b.suites.push_back({"self-adjoint", [t](int n) { return ssym::self_adjointness(*t, n); }});
    b.suites.push_back({"cube", [t](int n) { return ssym::cube_report(*t, n); }});
    b.suites.push_back({"constructor", [t](int n) { return t->constructor().validate(n); }});
    b.suites.push_back({"peak-lemma", [](int n) {
                            Report r("peak-free counting");
                            for (int k = 2; k <= n; ++k)
                                for (const auto& s : permutations(k))
                                    for (int pos : global_descents(s).positions) {
                                        auto rec = peak_free_count_lemma(s, pos);
                                        r.record("count identity", rec.holds(),
                                                 to_string(s) + " at " + std::to_string(pos) + ": " +
                                                     std::to_string(rec.lhs) + " != " + std::to_string(rec.rhs));
                                    }
                            return r;
                        }});
    b.suites.push_back({"dual hopf-axioms", [](int n) { return check_hopf_axioms(ssym::dual_algebra(), n); }});
    b.theta_table = [t](int n) { return io::ssym_theta_table(*t, n); };
    add_common_suites(b);
    return run_verb(b, o);
}

Output run_v(const Options& o) {
    require_map<Permutation>(o, {"theta", "phi"}, "v");
    static Backend<Permutation> b;
    b = Backend<Permutation>{};
    b.name = "v";
    b.default_basis = "v";
    b.tag_for = [](std::string_view s) { return vhopf::tag_for(s); };
    b.convert = [](const vhopf::VElement& a, std::string_view s) { return vhopf::convert(a, s); };
    b.structure = [](const BasisTag&) -> const HopfAlgebra<Permutation>& { return vhopf::algebra(); };
    bool phi = o.map == "phi";
    b.theta = [phi](const vhopf::VElement& a) {
        return phi ? vhopf::algebra().phi(vhopf::to_v(a)) : vhopf::theta(a);
    };
    b.odd_basis = [](int n) { return vhopf::odd_basis(n); };
    b.character = [] { return &vhopf::zeta(); };
    b.suites.push_back({"theta", [](int n) {
                            auto r = verify_theta(universal_psi(vhopf::zeta()), vhopf::theta_map(), n);
                            for (const auto& s : basis_up_to(vhopf::algebra(), n))
                                r.record("Psi onto the S basis",
                                         vhopf::psi_map().on_basis(s) ==
                                             qsym::to_M(qsym::S(Composition(block_sizes(s)))),
                                         to_string(s));
                            return r;
                        }});
    add_common_suites(b);
    return run_verb(b, o);
}

Output run_dsym(const Options& o) {
    require_map<Bipartition>(o, {"theta", "phi", "alt"}, "dsym");
    static Backend<Bipartition> b;
    b = Backend<Bipartition>{};
    b.name = "dsym";
    b.default_basis = "m";
    b.tag_for = [](std::string_view s) { return dsym::tag_for(s); };
    b.convert = [](const dsym::DSymElement& a, std::string_view s) { return dsym::convert(a, s); };
    b.structure = [](const BasisTag&) -> const HopfAlgebra<Bipartition>& { return dsym::algebra(); };
    bool alt = o.map == "alt";
    b.theta = [alt](const dsym::DSymElement& a) {
        return alt ? dsym::theta_alt_map()(dsym::to_m(a)) : dsym::theta(a);
    };
    b.character = [] { return &dsym::zeta(); };
    b.suites.push_back({"theta", [](int n) {
                            auto psi = universal_psi(dsym::zeta());
                            Report r("DSym theta maps");
                            r.merge(verify_theta(psi, dsym::theta_map(), n), "phi ");
                            r.merge(verify_theta(psi, dsym::theta_alt_map(), n), "alt ");
                            for (const auto& l : basis_up_to(dsym::algebra(), n)) {
                                r.record("antipode from e", dsym::antipode_via_e(dsym::m(l)) ==
                                                                dsym::algebra().antipode_on_basis(l),
                                         to_string(l));
                            }
                            return r;
                        }});
    b.suites.push_back({"q-identities", [](int n) { return dsym::q_identity_check(n); }});
    add_common_suites(b);
    return run_verb(b, o);
}

Output dispatch(const Options& o) {
    if (o.algebra == "qsym") return run_qsym(o);
    if (o.algebra == "nsym") return run_nsym(o);
    if (o.algebra == "sym") return run_sym(o);
    if (o.algebra == "ssym") return run_ssym(o);
    if (o.algebra == "v") return run_v(o);
    if (o.algebra == "dsym") return run_dsym(o);
    throw io::FormatError("unknown algebra '" + o.algebra + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact computations in combinatorial Hopf algebras", "hopfpeak"};
    app.add_option("verb", o.verb, "expand, mul, comul, antipode, theta, pair, odd-basis, verify or table")
        ->required()
        ->check(CLI::IsMember({"expand", "mul", "comul", "antipode", "theta", "pair", "odd-basis", "verify", "table"}));
    app.add_option("--algebra", o.algebra, "qsym, nsym, sym, ssym, v or dsym")
        ->check(CLI::IsMember({"qsym", "nsym", "sym", "ssym", "v", "dsym"}));
    app.add_option("--basis", o.basis, "basis of the input elements");
    app.add_option("--to", o.to, "basis of the output");
    app.add_option("--degree", o.degree, "degree for tables, odd bases and verification")
        ->check(CLI::Range(0, kHardDegreeLimit));
    app.add_option("--constructor", o.constructor, "default, or a JSON table of constructor values");
    app.add_option("--element", o.elements, "inline JSON, a bare index, or @file; repeat for two inputs")
        ->allow_extra_args(false);
    app.add_option("--out", o.out, "write the result to this file");
    app.add_option("--suite", o.suite, "verification suite, or all");
    app.add_option("--which", o.which, "table name, such as ssym-theta");
    app.add_option("--map", o.map, "theta, phi, or alt on dsym");
    app.add_option("--character", o.character, "canonical, odd or euler; pair evaluates it");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Output result;
    try {
        if (o.degree > degree_cap()) set_degree_cap(o.degree);
        if (o.verb == "table") {
            if (o.which.empty()) throw io::FormatError("table needs --which");
            auto dash = o.which.rfind("-theta");
            if (dash == std::string::npos || dash + 6 != o.which.size())
                throw io::FormatError("unknown table '" + o.which + "'");
            o.algebra = o.which.substr(0, dash);
        }
        result = dispatch(o);
    } catch (const Rejected& r) {
        out << dump(Json{{"constructor", o.constructor}, {"passed", false}, {"reports", {io::report_json(r.report)}}});
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (o.out.empty()) out << result.text;
    else {
        std::ofstream f(o.out);
        if (!f) {
            err << "error: cannot write '" << o.out << "'\n";
            return 2;
        }
        f << result.text;
    }
    return result.code;
}

}  // namespace hopfpeak::cli
