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

#include "hopfpeak/ssym.hpp"

#include <algorithm>
#include <stdexcept>

#include "hopfpeak/sym.hpp"

namespace hopfpeak::ssym {

namespace {

Permutation sub_std(const Permutation& s, int from, int to) {
    return standardize(std::vector<int>(s.word.begin() + from, s.word.begin() + to));
}

bool peak_free(const Permutation& s) { return peaks(s).empty(); }

bool primal(const BasisTag& t) { return t == kF || t == kM; }

void require_known(const BasisTag& t) {
    if (t != kF && t != kM && t != kFs && t != kMs)
        throw std::invalid_argument("not an SSym element: " + to_string(t));
}

const SSymElement& M_in_F(const Permutation& s) {
    static const Memo<Permutation, SSymElement> memo;
    return memo.get(s, [&] {
        SSymElement out(kF);
        for (const auto& t : weak_upper_set(s)) out.add_term(t, mobius_weak(s, t));
        return out;
    });
}

const SSymElement& Fs_in_Ms(const Permutation& s) {
    static const Memo<Permutation, SSymElement> memo;
    return memo.get(s, [&] {
        SSymElement out(kMs);
        for (const auto& t : weak_lower_set(s)) out.add_term(t, mobius_weak(t, s));
        return out;
    });
}

SSymElement expand(const SSymElement& a, const BasisTag& out_tag,
                   const std::function<SSymElement(const Permutation&)>& image) {
    return extend_linearly<Permutation, Permutation>(a, out_tag, image);
}

Tensor<Permutation> convert_tensor(const Tensor<Permutation>& t, std::string_view basis) {
    Tensor<Permutation> out(tag_for(basis));
    for (const auto& [k, c] : t) {
        auto x = convert(SSymElement(t.tag(), k.first), basis);
        auto y = convert(SSymElement(t.tag(), k.second), basis);
        for (const auto& [kx, cx] : x)
            for (const auto& [ky, cy] : y) out.add_term({kx, ky}, c * cx * cy);
    }
    return out;
}

}  // namespace

SSymElement SSym::compute_product(const Permutation& a, const Permutation& b) const {
    SSymElement out(kF);
    for (const auto& g : shifted_shuffle(a, b)) out.add_term(g, 1);
    return out;
}

SSym::Tens SSym::compute_coproduct(const Permutation& a) const {
    Tens out(kF);
    for (int i = 0; i <= a.size(); ++i) out.add_term({sub_std(a, 0, i), sub_std(a, i, a.size())}, 1);
    return out;
}

// F*_a F*_b sums F*_r over r whose first |a| letters standardize to a and
// whose remaining letters standardize to b.
SSymElement SSymDual::compute_product(const Permutation& a, const Permutation& b) const {
    SSymElement out(kFs);
    const int p = a.size(), n = a.size() + b.size();
    std::vector<bool> chosen(static_cast<std::size_t>(n), false);
    std::fill(chosen.begin(), chosen.begin() + p, true);
    std::sort(chosen.begin(), chosen.end());
    do {
        std::vector<int> first, second;
        for (int v = 1; v <= n; ++v) (chosen[static_cast<std::size_t>(v - 1)] ? first : second).push_back(v);
        std::vector<int> word;
        for (int x : a.word) word.push_back(first[static_cast<std::size_t>(x - 1)]);
        for (int x : b.word) word.push_back(second[static_cast<std::size_t>(x - 1)]);
        out.add_term(Permutation(std::move(word)), 1);
    } while (std::next_permutation(chosen.begin(), chosen.end()));
    return out;
}

SSymDual::Tens SSymDual::compute_coproduct(const Permutation& a) const {
    Tens out(kFs);
    for (int k = 0; k <= a.size(); ++k) {
        std::vector<int> low, high;
        for (int x : a.word) (x <= k ? low : high).push_back(x);
        out.add_term({Permutation(low), standardize(high)}, 1);
    }
    return out;
}

const SSym& algebra() {
    static const SSym h;
    return h;
}

const SSymDual& dual_algebra() {
    static const SSymDual h;
    return h;
}

BasisTag tag_for(std::string_view basis) {
    if (basis == "F") return kF;
    if (basis == "M") return kM;
    if (basis == "F*") return kFs;
    if (basis == "M*") return kMs;
    throw std::invalid_argument("unknown SSym basis '" + std::string(basis) + "'");
}

SSymElement to_F(const SSymElement& a) {
    if (a.tag() == kF) return a;
    if (a.tag() != kM) throw AlgebraMismatch(a.tag(), kF);
    return expand(a, kF, [](const Permutation& s) { return M_in_F(s); });
}

SSymElement to_Fs(const SSymElement& a) {
    if (a.tag() == kFs) return a;
    if (a.tag() != kMs) throw AlgebraMismatch(a.tag(), kFs);
    return expand(a, kFs, [](const Permutation& s) {
        SSymElement out(kFs);
        for (const auto& t : weak_lower_set(s)) out.add_term(t, 1);
        return out;
    });
}

SSymElement convert(const SSymElement& a, std::string_view basis) {
    require_known(a.tag());
    BasisTag target = tag_for(basis);
    if (primal(a.tag()) != primal(target)) throw AlgebraMismatch(a.tag(), target);
    if (a.tag() == target) return a;
    if (target == kF) return to_F(a);
    if (target == kFs) return to_Fs(a);
    if (target == kM)
        return expand(a, kM, [](const Permutation& s) {
            SSymElement out(kM);
            for (const auto& t : weak_upper_set(s)) out.add_term(t, 1);
            return out;
        });
    return expand(a, kMs, [](const Permutation& s) { return Fs_in_Ms(s); });
}

SSymElement product(const SSymElement& a, const SSymElement& b) {
    require_known(a.tag());
    if (primal(a.tag()))
        return convert(algebra().product(to_F(a), to_F(b)), a.tag().basis);
    return convert(dual_algebra().product(to_Fs(a), to_Fs(b)), a.tag().basis);
}

Tensor<Permutation> coproduct(const SSymElement& a) {
    require_known(a.tag());
    if (primal(a.tag())) return convert_tensor(algebra().coproduct(to_F(a)), a.tag().basis);
    return convert_tensor(dual_algebra().coproduct(to_Fs(a)), a.tag().basis);
}

Tensor<Permutation> M_coproduct(const Permutation& s) {
    Tensor<Permutation> out(kM);
    std::vector<int> cuts{0};
    for (int p : global_descents(s).positions) cuts.push_back(p);
    if (s.size() > 0) cuts.push_back(s.size());
    for (int i : cuts) out.add_term({sub_std(s, 0, i), sub_std(s, i, s.size())}, 1);
    return out;
}

SSymElement dual_product_Mstar(const Permutation& s, const Permutation& t) { return Ms(backslash(s, t)); }

const LinearMap<Permutation, Composition>& descent_map() {
    static const LinearMap<Permutation, Composition> d(
        kF, qsym::kM,
        [](const Permutation& s) { return qsym::to_M(qsym::L(from_descent_set(descents(s), s.size()))); }, "D");
    return d;
}

qsym::QSymElement descent(const SSymElement& a) { return descent_map()(to_F(a)); }

const LinearMap<Composition, Permutation>& descent_adjoint() {
    static const LinearMap<Composition, Permutation> d =
        adjoint(descent_map(), [](int n) { return permutations(n); }, kHardDegreeLimit);
    return d;
}

const LinearMap<Composition, Permutation>& nsym_embedding() {
    static const LinearMap<Composition, Permutation> i(
        nsym::kH, kF,
        [](const Composition& a) {
            SSymElement out = algebra().unit();
            for (int p : a.parts) out = algebra().product(out, F(identity_perm(p)));
            return out;
        },
        "iota_N");
    return i;
}

SSymElement self_duality(const SSymElement& a) {
    return expand(to_F(a), kFs, [](const Permutation& s) { return Fs(inverse(s)); });
}

SSymElement self_duality_inverse(const SSymElement& a) {
    return expand(to_Fs(a), kF, [](const Permutation& s) { return F(inverse(s)); });
}

const Character<Permutation>& zeta() {
    static const Character<Permutation> z(algebra(), "canonical", [](const Permutation& s) {
        return s == identity_perm(s.size()) ? Rational(1) : Rational(0);
    });
    return z;
}

SSymElement odd_char(int n) {
    SSymElement out(kFs);
    for (const auto& s : permutations(n))
        if (peak_free(s)) out.add_term(s, 2);
    return out;
}

SSymElement eta_perm(const Permutation& odd_s) {
    if (!is_odd_perm(odd_s)) throw std::invalid_argument("eta needs an odd permutation, got " + to_string(odd_s));
    SSymElement out(kM);
    for (const auto& t : weak_lower_set(odd_s))
        out.add_term(t, pow2(static_cast<int>(global_descents(t).positions.size()) + 1));
    return out;
}

std::vector<SSymElement> odd_basis(int n) {
    require_degree(n, "odd basis");
    std::vector<SSymElement> out;
    for (const auto& s : permutations(n)) {
        if (!is_di(s)) out.push_back(to_F(M(s)));
        else if (is_odd_perm(s)) out.push_back(to_F(eta_perm(s)));
    }
    return out;
}

Rational f_peak(const Permutation& s, const Permutation& t) {
    return peak_free(inverse(s)) && peak_free(t) ? Rational(2) : Rational(0);
}

ThetaConstructor::ThetaConstructor(Fn f, std::string name, int n_max) : f_(std::move(f)), name_(std::move(name)) {
    Report r = validate(n_max < 0 ? degree_cap() : n_max);
    if (!r.passed()) throw std::invalid_argument("invalid Theta constructor '" + name_ + "': " + r.summary());
}

ThetaConstructor ThetaConstructor::unchecked(Fn f, std::string name) {
    ThetaConstructor c;
    c.f_ = std::move(f);
    c.name_ = std::move(name);
    return c;
}

const ThetaConstructor& ThetaConstructor::default_constructor() {
    static const ThetaConstructor c(f_peak, "default");
    return c;
}

ThetaConstructor ThetaConstructor::from_table(
    const std::vector<std::tuple<Permutation, Permutation, Rational>>& table, std::string name, int n_max) {
    std::map<std::pair<Permutation, Permutation>, Rational> values;
    for (const auto& [s, t, v] : table) {
        if (s.size() != t.size())
            throw std::invalid_argument("constructor entry with unequal degrees: " + to_string(s) + ", " +
                                        to_string(t));
        values[{s, t}] = v;
    }
    return ThetaConstructor(
        [values = std::move(values)](const Permutation& s, const Permutation& t) {
            auto it = values.find({s, t});
            return it == values.end() ? f_peak(s, t) : it->second;
        },
        std::move(name), n_max);
}

Report ThetaConstructor::validate(int n_max) const {
    Report r("constructor " + name_);
    for (int n = 1; n <= n_max; ++n) {
        auto perms = permutations(n);
        Permutation id = identity_perm(n);
        for (const auto& t : perms) {
            Rational want = peak_free(t) ? 2 : 0;
            Rational got = f_(id, t);
            r.record("identity row", got == want,
                     "f(" + to_string(id) + "," + to_string(t) + ") = " + got.str() + ", expected " + want.str());
        }
        for (const auto& s : perms)
            for (const auto& t : perms)
                r.record("symmetry", f_(s, t) == f_(inverse(t), inverse(s)),
                         "f(" + to_string(s) + "," + to_string(t) + ") != f(" + to_string(inverse(t)) + "," +
                             to_string(inverse(s)) + ")");
    }
    return r;
}

ThetaStar::ThetaStar(ThetaConstructor f) : f_(std::move(f)) {
    dual_map_ = std::make_shared<LinearMap<Permutation, Permutation>>(
        kFs, kFs,
        [this](const Permutation& s) {
            SSymElement out(kFs);
            for (const auto& r : permutations(s.size())) out.add_term(r, entry(s, r));
            return out;
        },
        "theta*_" + f_.name());
    map_ = std::make_shared<LinearMap<Permutation, Permutation>>(
        kF, kF,
        [this](const Permutation& r) {
            SSymElement out(kF);
            for (const auto& s : permutations(r.size())) out.add_term(s, entry(s, r));
            return out;
        },
        "theta_" + f_.name());
}

Rational ThetaStar::entry(const Permutation& s, const Permutation& r) const {
    if (s.size() != r.size()) throw std::invalid_argument("theta* entry needs equal degrees");
    if (s.size() == 0) return 1;
    std::lock_guard<std::recursive_mutex> g(lock_);
    auto key = std::make_pair(s, r);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    if (std::find(open_.begin(), open_.end(), key) != open_.end())
        throw std::logic_error("theta* recursion revisits (" + to_string(s) + "," + to_string(r) + ")");
    open_.push_back(key);
    Rational v = compute(s, r);
    open_.pop_back();
    entries_.emplace(key, v);
    return v;
}

Rational ThetaStar::lower_sum(const Permutation& s, const Permutation& r) const {
    if (s.size() == 0) return 1;
    auto key = std::make_pair(s, r);
    if (auto it = lower_.find(key); it != lower_.end()) return it->second;
    Rational v = 0;
    for (const auto& g : weak_lower_set(s)) v += entry(g, r);
    lower_.emplace(key, v);
    return v;
}

// With every block of s = s_1 \ ... \ s_k GD-free,
// <Theta*(M*_s), F_r> = prod_i <Theta*(M*_{s_i}), F_{std(r_i)}> where r_i are
// the consecutive segments of r of lengths |s_i|.
Rational ThetaStar::compute(const Permutation& s, const Permutation& r) const {
    const int n = s.size();
    Permutation id = identity_perm(n);
    const bool s_free = is_gd_free(s), r_free = is_gd_free(r);
    if (s == id || r == id || (s_free && r_free)) return f_(s, r);
    if (s_free) return entry(inverse(r), inverse(s));
    Rational v = 1;
    int pos = 0;
    for (const auto& b : global_descents(s).blocks) {
        v *= lower_sum(b, sub_std(r, pos, pos + b.size()));
        pos += b.size();
    }
    for (const auto& g : weak_lower_set(s))
        if (g != s) v -= entry(g, r);
    return v;
}

RatMatrix ThetaStar::matrix(int n) const {
    auto perms = permutations(n);
    RatMatrix m(perms.size(), perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i)
        for (std::size_t j = 0; j < perms.size(); ++j) m(i, j) = entry(perms[i], perms[j]);
    return m;
}

SSymElement ThetaStar::apply_dual(const SSymElement& a) const {
    require_known(a.tag());
    if (primal(a.tag())) throw AlgebraMismatch(a.tag(), kFs);
    return convert((*dual_map_)(to_Fs(a)), a.tag().basis);
}

SSymElement ThetaStar::apply(const SSymElement& a) const {
    require_known(a.tag());
    if (!primal(a.tag())) throw AlgebraMismatch(a.tag(), kF);
    return convert((*map_)(to_F(a)), a.tag().basis);
}

const ThetaStar& default_theta() {
    static const ThetaStar t(ThetaConstructor::default_constructor());
    return t;
}

Report self_adjointness(const ThetaStar& t, int n_max) {
    Report r("self-adjointness of theta_" + t.constructor().name());
    for (int n = 1; n <= n_max; ++n) {
        auto perms = permutations(n);
        for (const auto& s : perms)
            for (const auto& u : perms) {
                Rational a = t.entry(s, inverse(u)), b = t.entry(u, inverse(s));
                r.record("self-adjoint", a == b, "(" + to_string(s) + "," + to_string(u) + "): " + a.str() + " != " + b.str());
            }
    }
    return r;
}

Report verify_ssym_theta(const ThetaStar& t, int n_max) {
    Report r("theta conditions for constructor " + t.constructor().name());
    for (int n = 0; n <= n_max; ++n) {
        for (const auto& s : permutations(n)) {
            auto img = t.map().on_basis(s);
            auto d = descent_map().on_basis(s);
            auto lhs = descent(img), rhs = qsym::theta(d);
            r.record("(1) D.Theta = Theta_QSym.D", lhs == rhs,
                     to_string(s) + ": " + to_string(lhs) + " != " + to_string(rhs));
            Rational a = zeta()(img), b = qsym::odd_char(d);
            r.record("(2) zeta_SSym.Theta = nu.D", a == b, to_string(s) + ": " + a.str() + " != " + b.str());
        }
        if (n > 0) {
            auto lhs = t.apply_dual(Fs(identity_perm(n)));
            auto want = odd_char(n);
            r.record("(3) Theta*(M*_1n) = odd character", lhs == want,
                     "degree " + std::to_string(n) + ": " + to_string(lhs) + " != " + to_string(want));
        }
        for (const auto& a : compositions(n)) {
            auto lhs = descent_adjoint()(nsym::theta_map().on_basis(a));
            auto rhs = t.dual_map()(descent_adjoint().on_basis(a));
            r.record("(4) D*.Theta_NSym = Theta*.D*", lhs == rhs,
                     to_string(a) + ": " + to_string(lhs) + " != " + to_string(rhs));
        }
        for (const auto& s : permutations(n)) {
            if (n == 0) continue;
            SSymElement prod = dual_algebra().unit();
            for (const auto& b : global_descents(s).blocks)
                prod = dual_algebra().product(prod, t.apply_dual(to_Fs(Ms(b))));
            auto whole = t.apply_dual(to_Fs(Ms(s)));
            r.record("Theta* multiplicative on M*", whole == prod, to_string(s));
        }
    }
    r.merge(self_adjointness(t, n_max));
    r.merge(check_hopf_morphism(algebra(), algebra(), t.map(), n_max, "theta"), "hopf ");
    return r;
}

Report cube_report(const ThetaStar& t, int n_max) {
    Report r("cube for constructor " + t.constructor().name());
    const auto& iota_n = nsym_embedding();
    for (int n = 0; n <= n_max; ++n) {
        for (const auto& a : compositions(n)) {
            auto theta_n = nsym::theta_map().on_basis(a);
            r.record("Theta.iota_N = iota_N.Theta_NSym", t.map()(iota_n.on_basis(a)) == iota_n(theta_n), to_string(a));
            r.record("pi.Theta_NSym = Theta_Sym.pi",
                     sym::pi_map()(theta_n) == sym::theta_map()(sym::pi_map().on_basis(a)), to_string(a));
            auto back = descent(iota_n.on_basis(a));
            r.record("D.iota_N = iota.pi", back == sym::iota_map()(sym::pi_map().on_basis(a)), to_string(a));
            auto front = descent(t.map()(iota_n.on_basis(a)));
            r.record("D.Theta.iota_N = iota.Theta_Sym.pi",
                     front == sym::iota_map()(sym::theta_map()(sym::pi_map().on_basis(a))), to_string(a));
        }
        for (const auto& s : permutations(n))
            r.record("D.Theta = Theta_QSym.D",
                     descent(t.map().on_basis(s)) == qsym::theta(descent_map().on_basis(s)), to_string(s));
        for (const auto& l : partitions(n))
            r.record("iota.Theta_Sym = Theta_QSym.iota",
                     sym::iota_map()(sym::theta_map().on_basis(l)) == qsym::theta(sym::iota_map().on_basis(l)),
                     to_string(l));
    }
    return r;
}

}  // namespace hopfpeak::ssym
