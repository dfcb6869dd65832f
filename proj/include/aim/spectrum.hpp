#pragma once

#include "aim/exact/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aim {

enum class Provenance { closed_form, symbolic_aim, jet_aim, fd_oracle };

std::string_view provenance_name(Provenance p);
/// Inverse of provenance_name; nullopt for unknown names.
std::optional<Provenance> parse_provenance(std::string_view name);

struct SpectrumEntry {
    int n = 0;
    /// Set when the eigenvalue is known exactly.
    std::optional<Rational> exact;
    double value = 0.0;
    Provenance provenance = Provenance::closed_form;
    int iterations = 0;
    bool converged = true;
    /// Last observed change between iterations (jet) or bisection width (oracle).
    double change = 0.0;
    std::string note;

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Eigenvalues strictly ordered by index n.
class Spectrum {
public:
    /// Throws aim::Error if e.n does not exceed the last stored index.
    void push(SpectrumEntry e);
    [[nodiscard]] const std::vector<SpectrumEntry>& entries() const { return entries_; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] bool empty() const { return entries_.empty(); }
    [[nodiscard]] const SpectrumEntry& operator[](std::size_t i) const { return entries_[i]; }
    friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
    std::vector<SpectrumEntry> entries_;
};

}  // namespace aim
