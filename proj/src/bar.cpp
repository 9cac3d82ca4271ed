#include "motivic/bar.hpp"

#include <functional>

namespace motivic {

int BarWord::bar_degree() const {
    int d = 0;
    for (const auto& m : letters)
        d += m.bidegree().coh - 1;
    return d;
}

int BarWord::adams_degree() const {
    int r = 0;
    for (const auto& m : letters)
        r += m.bidegree().adams;
    return r;
}

std::string BarWord::str() const {
    std::string s = "[";
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i)
            s += "|";
        s += letters[i].str();
    }
    return s + "]";
}

int compare(const BarWord& x, const BarWord& y) {
    if (x.letters.size() != y.letters.size())
        return x.letters.size() < y.letters.size() ? -1 : 1;
    for (size_t i = 0; i < x.letters.size(); ++i)
        if (int c = compare(x.letters[i], y.letters[i]); c != 0)
            return c;
    return 0;
}

BarElement BarElement::unit_word() {
    BarElement e;
    e.terms_[BarWord{}] = 1;
    return e;
}

BarElement BarElement::from_word(BarWord w, Rat coeff) {
    BarElement e;
    if (coeff != 0)
        e.terms_[std::move(w)] = std::move(coeff);
    return e;
}

BarElement BarElement::word(const std::vector<CdgaElement>& letters) {
    BarElement acc = unit_word();
    for (const auto& el : letters) {
        BarElement next;
        for (const auto& [w, cw] : acc.terms_) {
            for (const auto& [m, cm] : el.terms()) {
                if (m.bidegree().adams <= 0)
                    throw std::invalid_argument(
                        "BarElement::word: letter has an Adams-degree-0 component: " + m.str());
                BarWord ext = w;
                ext.letters.push_back(m);
                next.add_term(std::move(ext), cw * cm);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

void BarElement::add_term(BarWord w, Rat coeff) {
    if (coeff == 0)
        return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), std::move(coeff));
        return;
    }
    it->second += coeff;
    if (it->second == 0)
        terms_.erase(it);
}

bool BarElement::is_homogeneous_degree(int deg) const {
    for (const auto& [w, c] : terms_)
        if (w.bar_degree() != deg)
            return false;
    return true;
}

bool BarElement::is_homogeneous_adams() const {
    if (terms_.empty())
        return true;
    int r = terms_.begin()->first.adams_degree();
    for (const auto& [w, c] : terms_)
        if (w.adams_degree() != r)
            return false;
    return true;
}

int BarElement::adams_degree() const {
    if (terms_.empty())
        throw std::logic_error("adams_degree: zero element");
    int r = terms_.begin()->first.adams_degree();
    for (const auto& [w, c] : terms_)
        if (w.adams_degree() != r)
            throw std::logic_error("adams_degree: mixed Adams degrees");
    return r;
}

BarElement& BarElement::operator+=(const BarElement& o) {
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

BarElement& BarElement::operator-=(const BarElement& o) {
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

BarElement& BarElement::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_)
        v *= c;
    return *this;
}

std::string BarElement::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first)
            s += " + ";
        first = false;
        s += c.str() + "·" + w.str();
    }
    return s;
}

namespace {

inline int jsign(const Monomial& m) { return (m.bidegree().coh % 2 == 0) ? 1 : -1; }

} // namespace

BarElement bar_d_internal(const BarElement& x) {
    BarElement out;
    for (const auto& [w, c] : x.terms()) {
        const auto& L = w.letters;
        for (size_t i = 0; i < L.size(); ++i) {
            CdgaElement dl = differential(CdgaElement::from_monomial(L[i], 1));
            if (dl.is_zero())
                continue;
            // sign (-1)^{i+1} for slot i (1-based in the defining formula),
            // times J on the letters in front.
            int sg = (i % 2 == 0) ? -1 : 1;
            for (size_t p = 0; p < i; ++p)
                sg *= jsign(L[p]);
            for (const auto& [dm, dc] : dl.terms()) {
                BarWord nw;
                nw.letters = L;
                nw.letters[i] = dm;
                out.add_term(std::move(nw), c * dc * sg);
            }
        }
    }
    return out;
}

BarElement bar_d_external(const BarElement& x) {
    BarElement out;
    for (const auto& [w, c] : x.terms()) {
        const auto& L = w.letters;
        if (L.size() < 2)
            continue; // end terms carry the augmentation of a letter in N_+
        for (size_t i = 0; i + 1 < L.size(); ++i) {
            // contraction (J a_{i+1}) a_{i+2} at 1-based slot i+1, sign (-1)^{i+2}
            int sg = (i % 2 == 0) ? 1 : -1;
            for (size_t p = 0; p < i; ++p)
                sg *= jsign(L[p]);
            sg *= jsign(L[i]);
            CdgaElement prod =
                monomial_product(L[i], L[i + 1]);
            if (prod.is_zero())
                continue;
            for (const auto& [pm, pc] : prod.terms()) {
                BarWord nw;
                nw.letters.reserve(L.size() - 1);
                for (size_t p = 0; p < i; ++p)
                    nw.letters.push_back(L[p]);
                nw.letters.push_back(pm);
                for (size_t p = i + 2; p < L.size(); ++p)
                    nw.letters.push_back(L[p]);
                out.add_term(std::move(nw), c * pc * sg);
            }
        }
    }
    return out;
}

namespace {

inline int shifted_deg(const Monomial& m) { return m.bidegree().coh - 1; }

// All (p,q)-shuffles by recursion; the sign accumulates a Koszul factor each
// time a y-letter jumps past the remaining x-letters.
void shuffle_words(const std::vector<Monomial>& xs, const std::vector<Monomial>& ys,
                   size_t i, size_t j, std::vector<Monomial>& cur, int sign, int x_shift_sum,
                   const Rat& coeff, BarElement& out) {
    if (i == xs.size() && j == ys.size()) {
        BarWord w;
        w.letters = cur;
        out.add_term(std::move(w), coeff * sign);
        return;
    }
    if (i < xs.size()) {
        cur.push_back(xs[i]);
        shuffle_words(xs, ys, i + 1, j, cur, sign, x_shift_sum - shifted_deg(xs[i]), coeff, out);
        cur.pop_back();
    }
    if (j < ys.size()) {
        int jump = shifted_deg(ys[j]) * x_shift_sum;
        int s = (jump % 2 == 0) ? sign : -sign;
        cur.push_back(ys[j]);
        shuffle_words(xs, ys, i, j + 1, cur, s, x_shift_sum, coeff, out);
        cur.pop_back();
    }
}

} // namespace

BarElement shuffle(const BarElement& x, const BarElement& y) {
    BarElement out;
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) {
            int total = 0;
            for (const auto& m : wx.letters)
                total += shifted_deg(m);
            std::vector<Monomial> cur;
            cur.reserve(wx.letters.size() + wy.letters.size());
            shuffle_words(wx.letters, wy.letters, 0, 0, cur, 1, total, cx * cy, out);
        }
    return out;
}

BarElement shuffle_power(const BarElement& x, int n) {
    BarElement acc = BarElement::unit_word();
    for (int i = 0; i < n; ++i)
        acc = shuffle(acc, x);
    return acc;
}

void BarPairElement::add_term(BarWord l, BarWord r, Rat coeff) {
    if (coeff == 0)
        return;
    auto key = std::make_pair(std::move(l), std::move(r));
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), std::move(coeff));
        return;
    }
    it->second += coeff;
    if (it->second == 0)
        terms_.erase(it);
}

BarPairElement& BarPairElement::operator+=(const BarPairElement& o) {
    for (const auto& [k, c] : o.terms_)
        add_term(k.first, k.second, c);
    return *this;
}

BarPairElement& BarPairElement::operator-=(const BarPairElement& o) {
    for (const auto& [k, c] : o.terms_)
        add_term(k.first, k.second, -c);
    return *this;
}

std::string BarPairElement::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first)
            s += " + ";
        first = false;
        s += c.str() + "·" + k.first.str() + "(x)" + k.second.str();
    }
    return s;
}

BarPairElement coproduct(const BarElement& x) {
    BarPairElement out;
    for (const auto& [w, c] : x.terms()) {
        for (size_t cut = 0; cut <= w.letters.size(); ++cut) {
            BarWord l, r;
            l.letters.assign(w.letters.begin(), w.letters.begin() + cut);
            r.letters.assign(w.letters.begin() + cut, w.letters.end());
            out.add_term(std::move(l), std::move(r), c);
        }
    }
    return out;
}

BarPairElement tensor_pair(const BarElement& x, const BarElement& y) {
    BarPairElement out;
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms())
            out.add_term(wx, wy, cx * cy);
    return out;
}

Rat counit(const BarElement& x) {
    auto it = x.terms().find(BarWord{});
    return it == x.terms().end() ? Rat(0) : it->second;
}

bool is_cocycle(const BarElement& x) {
    if (!x.is_homogeneous_degree(0))
        throw std::invalid_argument("is_cocycle: element is not homogeneous of bar degree 0");
    return bar_d(x).is_zero();
}

} // namespace motivic
