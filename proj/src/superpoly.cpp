#include "gsym/superpoly.hpp"

#include <algorithm>
#include <sstream>

namespace gsym {

int mono_weight(const Chart& c, const Mono& m) {
    int w = 0;
    for (std::size_t e = 0; e < m.even.size(); ++e)
        w += static_cast<int>(m.even[e]) * c.var(c.even_id(e)).weight;
    for (int o : m.odd) w += c.var(c.odd_id(static_cast<std::size_t>(o))).weight;
    return w;
}

int mono_parity(const Mono& m) { return static_cast<int>(m.odd.size()) & 1; }

std::optional<std::pair<int, Mono>> mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    r.even.resize(a.even.size());
    for (std::size_t i = 0; i < a.even.size(); ++i) r.even[i] = a.even[i] + b.even[i];
    // merge odd sequences, counting inversions (b-elements jumped over a-tail)
    r.odd.reserve(a.odd.size() + b.odd.size());
    std::size_t i = 0, j = 0;
    long inv = 0;
    while (i < a.odd.size() && j < b.odd.size()) {
        if (a.odd[i] == b.odd[j]) return std::nullopt; // odd square vanishes
        if (a.odd[i] < b.odd[j]) {
            r.odd.push_back(a.odd[i++]);
        } else {
            inv += static_cast<long>(a.odd.size() - i);
            r.odd.push_back(b.odd[j++]);
        }
    }
    while (i < a.odd.size()) r.odd.push_back(a.odd[i++]);
    while (j < b.odd.size()) r.odd.push_back(b.odd[j++]);
    return std::make_pair((inv & 1) ? -1 : 1, std::move(r));
}

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
    int wa = mono_weight(*chart, a), wb = mono_weight(*chart, b);
    if (wa != wb) return wa < wb;
    if (a.even != b.even) return a.even < b.even;
    return a.odd < b.odd;
}

Poly::Poly(ChartPtr ctx) : ctx_(std::move(ctx)), terms_(MonoLess{ctx_.get()}) {}

Poly Poly::constant(ChartPtr ctx, Rat c) {
    Poly p(std::move(ctx));
    if (c != 0) {
        Mono one;
        one.even.assign(p.ctx_->even_count(), 0);
        p.terms_.emplace(std::move(one), std::move(c));
    }
    return p;
}

Poly Poly::var(ChartPtr ctx, int var_id) {
    Poly p(ctx);
    const GradedVar& v = ctx->var(var_id);
    Mono m;
    m.even.assign(ctx->even_count(), 0);
    int pos = ctx->class_pos(var_id);
    if (v.parity == Parity::even)
        m.even[static_cast<std::size_t>(pos)] = 1;
    else
        m.odd.push_back(pos);
    p.terms_.emplace(std::move(m), 1);
    return p;
}

Poly Poly::var(ChartPtr ctx, const std::string& name) {
    return var(ctx, ctx->require_var(name));
}

void Poly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void require_same_context(const Poly& a, const Poly& b) {
    if (a.context() != b.context())
        throw context_error("operands live over different charts");
}

Poly Poly::operator-() const {
    Poly r(ctx_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_context(*this, o);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_context(*this, o);
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_context(*this, o);
    Poly r(ctx_);
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) {
            auto prod = mono_mul(ma, mb);
            if (!prod) continue;
            r.add_term(prod->second, ca * cb * prod->first);
        }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(ctx_);
    if (c == 0) return r;
    for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    return ctx_ == o.ctx_ &&
           std::equal(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end());
}

Poly Poly::left_derivative(int var_id) const {
    if (var_id < 0 || static_cast<std::size_t>(var_id) >= ctx_->var_count())
        throw context_error("unknown variable id in derivative");
    const GradedVar& v = ctx_->var(var_id);
    int pos = ctx_->class_pos(var_id);
    Poly r(ctx_);
    for (auto& [m, c] : terms_) {
        if (v.parity == Parity::even) {
            unsigned e = m.even[static_cast<std::size_t>(pos)];
            if (e == 0) continue;
            Mono d = m;
            d.even[static_cast<std::size_t>(pos)] = e - 1;
            r.add_term(d, c * e);
        } else {
            auto it = std::find(m.odd.begin(), m.odd.end(), pos);
            if (it == m.odd.end()) continue;
            auto t = std::distance(m.odd.begin(), it);
            Mono d = m;
            d.odd.erase(d.odd.begin() + t);
            r.add_term(d, (t & 1) ? -c : c);
        }
    }
    return r;
}

Poly Poly::left_derivative(const std::string& name) const {
    return left_derivative(ctx_->require_var(name));
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (images.size() != ctx_->var_count())
        throw context_error("substitute: one image per variable required");
    ChartPtr target = images.empty() ? ctx_ : images[0].context();
    for (std::size_t id = 0; id < images.size(); ++id) {
        const Poly& img = images[id];
        if (img.context() != target)
            throw context_error("substitute: images over different charts");
        const GradedVar& v = ctx_->var(static_cast<int>(id));
        if (img.is_zero()) continue;
        if (!img.is_weight_homogeneous() || img.weight() != v.weight)
            throw grading_error("substitute: image of " + v.name + " changes weight");
        auto p = img.parity();
        if (!p || *p != static_cast<int>(v.parity))
            throw grading_error("substitute: image of " + v.name + " changes parity");
    }
    Poly result(target);
    for (auto& [m, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (std::size_t e = 0; e < m.even.size(); ++e)
            for (unsigned k = 0; k < m.even[e]; ++k)
                t = t * images[static_cast<std::size_t>(ctx_->even_id(e))];
        for (int o : m.odd)
            t = t * images[static_cast<std::size_t>(ctx_->odd_id(static_cast<std::size_t>(o)))];
        result += t;
    }
    return result;
}

std::map<int, Poly> Poly::weight_decompose() const {
    std::map<int, Poly> out;
    for (auto& [m, c] : terms_) {
        int w = mono_weight(*ctx_, m);
        auto it = out.find(w);
        if (it == out.end()) it = out.emplace(w, Poly(ctx_)).first;
        it->second.add_term(m, c);
    }
    return out;
}

bool Poly::is_weight_homogeneous() const {
    if (terms_.empty()) return true;
    int w = mono_weight(*ctx_, terms_.begin()->first);
    for (auto& [m, c] : terms_)
        if (mono_weight(*ctx_, m) != w) return false;
    return true;
}

int Poly::weight() const {
    if (terms_.empty()) return 0;
    if (!is_weight_homogeneous()) throw grading_error("polynomial is not weight-homogeneous");
    return mono_weight(*ctx_, terms_.begin()->first);
}

std::optional<int> Poly::parity() const {
    if (terms_.empty()) return 0;
    int p = mono_parity(terms_.begin()->first);
    for (auto& [m, c] : terms_)
        if (mono_parity(m) != p) return std::nullopt;
    return p;
}

std::pair<int, int> Poly::term_bidegree(const Chart& c, const Mono& m) {
    if (!c.bigraded()) throw grading_error("chart carries no bidegrees");
    int k = 0, l = 0;
    for (std::size_t e = 0; e < m.even.size(); ++e) {
        auto bd = c.var(c.even_id(e)).bidegree.value();
        k += static_cast<int>(m.even[e]) * bd.first;
        l += static_cast<int>(m.even[e]) * bd.second;
    }
    for (int o : m.odd) {
        auto bd = c.var(c.odd_id(static_cast<std::size_t>(o))).bidegree.value();
        k += bd.first;
        l += bd.second;
    }
    return {k, l};
}

std::map<std::pair<int, int>, Poly> Poly::bidegree_decompose() const {
    std::map<std::pair<int, int>, Poly> out;
    for (auto& [m, c] : terms_) {
        auto kl = term_bidegree(*ctx_, m);
        auto it = out.find(kl);
        if (it == out.end()) it = out.emplace(kl, Poly(ctx_)).first;
        it->second.add_term(m, c);
    }
    return out;
}

bool Poly::is_bidegree(int k, int l) const {
    for (auto& [m, c] : terms_)
        if (term_bidegree(*ctx_, m) != std::make_pair(k, l)) return false;
    return true;
}

Rat Poly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_term_at_origin() const {
    Mono one;
    one.even.assign(ctx_->even_count(), 0);
    return coeff(one);
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = abs(c);
        bool has_vars = !m.odd.empty() ||
                        std::any_of(m.even.begin(), m.even.end(), [](unsigned e) { return e > 0; });
        if (a != 1 || !has_vars) os << format_rational(a) << (has_vars ? "*" : "");
        bool star = false;
        for (std::size_t e = 0; e < m.even.size(); ++e) {
            if (m.even[e] == 0) continue;
            if (star) os << "*";
            os << ctx_->var(ctx_->even_id(e)).name;
            if (m.even[e] > 1) os << "^" << m.even[e];
            star = true;
        }
        for (int o : m.odd) {
            if (star) os << "*";
            os << ctx_->var(ctx_->odd_id(static_cast<std::size_t>(o))).name;
            star = true;
        }
    }
    return os.str();
}

} // namespace gsym
