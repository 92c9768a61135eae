#include "antidim/closed_form.hpp"

#include "antidim/error.hpp"

#include <algorithm>

namespace antidim {

namespace {
    constexpr auto odd(std::size_t x) -> bool { return x % 2 == 1; }
    constexpr auto even(std::size_t x) -> bool { return x % 2 == 0; }

    auto check_k(std::size_t k) -> void
    {
        if (k < 1)
            throw Error(Errc::InvalidK, "k must be at least 1");
    }

    constexpr auto finite(std::size_t v) -> AdimValue { return AdimValue{ v }; }
    constexpr auto inf = AdimValue::infinity();
}

auto to_string(const AdimValue & value) -> std::string
{
    return value.is_infinite() ? "inf" : std::to_string(value.value());
}

auto grid_adim(std::size_t r, std::size_t s, std::size_t k) -> AdimValue
{
    validate(FamilySpec::grid(r, s));
    check_k(k);
    bool both_odd = odd(r) && odd(s);
    switch (k) {
        case 1: return finite(1);
        case 2: return even(r) && even(s) ? finite(2) : finite(1);
        case 4: return both_odd ? finite(1) : inf;
        default: return inf;
    }
}

auto cylinder_adim(std::size_t r, std::size_t s, std::size_t k) -> AdimValue
{
    validate(FamilySpec::cylinder(r, s));
    check_k(k);
    switch (k) {
        case 1: return odd(s) ? finite(2) : finite(1);
        case 2: return even(r) && even(s) ? finite(4) : finite(1);
        case 3: return even(s) ? finite(2) : inf;
        case 4: return odd(r) && odd(s) ? finite(1) : inf;
        default: return inf;
    }
}

auto torus_adim(std::size_t r, std::size_t s, std::size_t k) -> AdimValue
{
    validate(FamilySpec::torus(r, s));
    check_k(k);
    bool both_even = even(r) && even(s);
    bool both_odd = odd(r) && odd(s);
    switch (k) {
        case 1: return both_even ? finite(1) : finite(2);
        case 2:
            if (both_even)
                return finite(4);
            if (both_odd)
                return finite(std::min(r, s));
            return finite(1);
        case 3: return both_even ? finite(4) : inf;
        case 4:
            if (both_odd)
                return finite(1);
            if (both_even)
                return finite(2);
            return inf;
        default: return inf;
    }
}

auto hamming_adim(std::size_t r, std::size_t k) -> AdimValue
{
    validate(FamilySpec::hamming2(r));
    check_k(k);
    if (k == 1)
        return finite(3);
    if (k == 2)
        return finite(2);
    if (k <= r - 2)
        return finite(r - k);
    if (k == r - 1)
        return finite(r);
    if (k == 2 * r - 2)
        return finite(1);
    return inf;
}

auto family_adim(const FamilySpec & spec, std::size_t k) -> AdimValue
{
    switch (spec.kind) {
        case FamilyKind::Grid: return grid_adim(spec.r, spec.s, k);
        case FamilyKind::Cylinder: return cylinder_adim(spec.r, spec.s, k);
        case FamilyKind::Torus: return torus_adim(spec.r, spec.s, k);
        case FamilyKind::Hamming2: return hamming_adim(spec.r, k);
    }
    throw Error(Errc::InvalidSpec, "unknown family");
}

auto kappa_closed(const FamilySpec & spec) -> std::size_t
{
    validate(spec);
    auto [kind, r, s] = spec;
    switch (kind) {
        case FamilyKind::Grid: return odd(r) && odd(s) ? 4 : 2;
        case FamilyKind::Cylinder:
            if (odd(r) && odd(s))
                return 4;
            return even(s) ? 3 : 2;
        case FamilyKind::Torus: return r % 2 == s % 2 ? 4 : 2;
        case FamilyKind::Hamming2: return 2 * r - 2;
    }
    throw Error(Errc::InvalidSpec, "unknown family");
}

auto anonymity(const std::function<AdimValue(std::size_t)> & adim, std::size_t kappa, std::size_t ell)
    -> AnonymityResult
{
    AnonymityResult result;
    result.ell = ell;
    for (std::size_t k = 1; k <= kappa; ++k) {
        auto value = adim(k);
        if (! value.is_infinite() && value.value() <= ell) {
            result.k = k;
            break;
        }
    }
    return result;
}

auto family_anonymity(const FamilySpec & spec, std::size_t ell) -> AnonymityResult
{
    return anonymity([&](std::size_t k) { return family_adim(spec, k); }, kappa_closed(spec), ell);
}

} // namespace antidim
