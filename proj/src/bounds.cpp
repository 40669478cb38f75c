#include "actdim/bounds.hpp"

#include <algorithm>

#include "actdim/errors.hpp"

namespace actdim {

std::string to_string(BoundKind k)
{
    switch (k) {
    case BoundKind::Upper:
        return "upper";
    case BoundKind::Lower:
        return "lower";
    case BoundKind::Exact:
        return "exact";
    }
    return "?";
}

void BoundReport::add(std::string quantity, BoundKind kind, long long value, std::string provenance)
{
    bounds.push_back(Bound{std::move(quantity), kind, value, std::move(provenance)});
}

std::optional<long long> BoundReport::lower(const std::string& quantity) const
{
    std::optional<long long> best;
    for (const auto& b : bounds)
        if (b.quantity == quantity && b.kind != BoundKind::Upper)
            best = best ? std::max(*best, b.value) : b.value;
    return best;
}

std::optional<long long> BoundReport::upper(const std::string& quantity) const
{
    std::optional<long long> best;
    for (const auto& b : bounds)
        if (b.quantity == quantity && b.kind != BoundKind::Lower)
            best = best ? std::min(*best, b.value) : b.value;
    return best;
}

std::optional<long long> BoundReport::exact(const std::string& quantity) const
{
    auto lo = lower(quantity);
    auto hi = upper(quantity);
    if (lo && hi && *lo == *hi)
        return lo;
    return std::nullopt;
}

void BoundReport::check_consistency() const
{
    for (const std::string q : {"actdim", "obdim", "gdim"}) {
        auto lo = lower(q);
        auto hi = upper(q);
        check_internal(!lo || !hi || *lo <= *hi,
                       q + " bounds contradict: lower " + std::to_string(*lo) + " > upper " + std::to_string(*hi));
    }
    auto act_hi = upper("actdim");
    if (!act_hi)
        return;
    for (const std::string q : {"obdim", "gdim"}) {
        auto lo = lower(q);
        check_internal(!lo || *lo <= *act_hi, q + " lower bound " + std::to_string(*lo) +
                                                  " exceeds the actdim upper bound " + std::to_string(*act_hi));
    }
}

}  // namespace actdim
