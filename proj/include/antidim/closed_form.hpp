#pragma once

#include "antidim/families.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

namespace antidim {

/// adim_k value: a positive cardinality, or infinity when no k-ARS exists.
class AdimValue
{
public:
    constexpr AdimValue() = default;
    constexpr explicit AdimValue(std::size_t value) : _value(value) {}

    static constexpr auto infinity() -> AdimValue { return {}; }

    constexpr auto is_infinite() const -> bool { return ! _value.has_value(); }
    constexpr auto value() const -> std::size_t { return *_value; }

    friend constexpr auto operator==(const AdimValue &, const AdimValue &) -> bool = default;

private:
    std::optional<std::size_t> _value;
};

auto to_string(const AdimValue & value) -> std::string;

// Closed forms for the product families. Combinations of k and parity that
// the case analysis does not list are infinite: they all have k above the
// family's kappa, or are the excluded k = 3 on odd-odd shapes.

auto grid_adim(std::size_t r, std::size_t s, std::size_t k) -> AdimValue;
auto cylinder_adim(std::size_t r, std::size_t s, std::size_t k) -> AdimValue;
auto torus_adim(std::size_t r, std::size_t s, std::size_t k) -> AdimValue;
auto hamming_adim(std::size_t r, std::size_t k) -> AdimValue;

/// Dispatches on spec.kind.
auto family_adim(const FamilySpec & spec, std::size_t k) -> AdimValue;

/// Largest k for which the family admits a k-ARS.
auto kappa_closed(const FamilySpec & spec) -> std::size_t;

struct AnonymityResult
{
    /// Smallest k with adim_k <= ell, or empty when none in 1..kappa.
    std::optional<std::size_t> k;
    std::size_t ell = 0;
};

/// (k, ell)-anonymity: smallest k in 1..kappa whose adim_k is at most ell.
auto anonymity(const std::function<AdimValue(std::size_t)> & adim, std::size_t kappa, std::size_t ell)
    -> AnonymityResult;

auto family_anonymity(const FamilySpec & spec, std::size_t ell) -> AnonymityResult;

} // namespace antidim
