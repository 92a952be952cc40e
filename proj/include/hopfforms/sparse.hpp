#ifndef HOPFFORMS_SPARSE_HPP
#define HOPFFORMS_SPARSE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace hopfforms {

/// Sparse vector over a field context F: sorted (index, value) terms with
/// no explicit zeros. The workhorse representation for structure constants,
/// where products of basis elements touch only a few coordinates.
template <class F>
struct SVec {
    using Elem = typename F::Elem;
    std::vector<std::pair<size_t, Elem>> terms;

    bool empty() const { return terms.empty(); }
    size_t nnz() const { return terms.size(); }
};

template <class F>
SVec<F> svec_single(size_t idx, typename F::Elem v) {
    SVec<F> s;
    s.terms.emplace_back(idx, std::move(v));
    return s;
}

template <class F>
SVec<F> svec_from_dense(const F& field, const std::vector<typename F::Elem>& v) {
    SVec<F> s;
    for (size_t i = 0; i < v.size(); ++i)
        if (!field.is_zero(v[i])) s.terms.emplace_back(i, v[i]);
    return s;
}

template <class F>
std::vector<typename F::Elem> svec_to_dense(const F& field, const SVec<F>& s, size_t n) {
    std::vector<typename F::Elem> v(n, field.zero());
    for (const auto& [i, c] : s.terms) v[i] = c;
    return v;
}

template <class F>
bool svec_eq(const F& field, const SVec<F>& a, const SVec<F>& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i) {
        if (a.terms[i].first != b.terms[i].first) return false;
        if (!field.eq(a.terms[i].second, b.terms[i].second)) return false;
    }
    return true;
}

template <class F>
SVec<F> svec_scale(const F& field, const SVec<F>& a, const typename F::Elem& c) {
    SVec<F> r;
    if (field.is_zero(c)) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& [i, v] : a.terms) {
        auto prod = field.mul(v, c);
        if (!field.is_zero(prod)) r.terms.emplace_back(i, std::move(prod));
    }
    return r;
}

/// Ordered-map accumulator; flushing yields a canonical sorted SVec.
template <class F>
class SparseAccum {
public:
    explicit SparseAccum(const F& field) : field_(field) {}

    void add(size_t idx, const typename F::Elem& v) {
        if (field_.is_zero(v)) return;
        auto [it, inserted] = acc_.try_emplace(idx, v);
        if (!inserted) it->second = field_.add(it->second, v);
    }
    void add_scaled(const SVec<F>& s, const typename F::Elem& c) {
        if (field_.is_zero(c)) return;
        for (const auto& [i, v] : s.terms) add(i, field_.mul(v, c));
    }
    void add(const SVec<F>& s) {
        for (const auto& [i, v] : s.terms) add(i, v);
    }

    SVec<F> flush() {
        SVec<F> r;
        r.terms.reserve(acc_.size());
        for (auto& [i, v] : acc_)
            if (!field_.is_zero(v)) r.terms.emplace_back(i, std::move(v));
        acc_.clear();
        return r;
    }

private:
    const F& field_;
    std::map<size_t, typename F::Elem> acc_;
};

template <class F>
SVec<F> svec_add(const F& field, const SVec<F>& a, const SVec<F>& b) {
    SparseAccum<F> acc(field);
    acc.add(a);
    acc.add(b);
    return acc.flush();
}

inline size_t tensor_index(size_t dim, size_t i, size_t j) { return i * dim + j; }

}  // namespace hopfforms

#endif
