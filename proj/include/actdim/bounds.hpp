/**
 * Dimension bounds with provenance, shared by the Artin, graph-product and
 * arrangement reports.
 */
#ifndef ACTDIM_BOUNDS_HPP
#define ACTDIM_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

namespace actdim {

enum class BoundKind { Upper, Lower, Exact };

std::string to_string(BoundKind k);

struct Bound
{
    std::string quantity;  ///< "actdim", "obdim" or "gdim"
    BoundKind kind = BoundKind::Upper;
    long long value = 0;
    std::string provenance;
};

struct BoundReport
{
    std::vector<Bound> bounds;
    /// Results that were checked but gave nothing, or side remarks.
    std::vector<std::string> notes;

    void add(std::string quantity, BoundKind kind, long long value, std::string provenance);

    std::optional<long long> lower(const std::string& quantity) const;
    std::optional<long long> upper(const std::string& quantity) const;
    /// The value when lower and upper bounds meet (or an exact bound exists).
    std::optional<long long> exact(const std::string& quantity) const;

    /**
     * Throws InternalError when some lower bound exceeds some upper bound.
     * obdim is a lower bound for actdim and gdim is at most actdim, so those
     * are folded into the actdim comparison.
     */
    void check_consistency() const;
};

}  // namespace actdim

#endif
