#include "aim/spectrum.hpp"

#include "aim/errors.hpp"

#include <array>
#include <utility>

namespace aim {

namespace {

constexpr std::array<std::pair<Provenance, std::string_view>, 4> kNames{{
    {Provenance::closed_form, "closed-form"},
    {Provenance::symbolic_aim, "symbolic-AIM"},
    {Provenance::jet_aim, "jet-AIM"},
    {Provenance::fd_oracle, "FD-oracle"},
}};

}  // namespace

std::string_view provenance_name(Provenance p) {
    for (const auto& [tag, name] : kNames)
        if (tag == p) return name;
    return "unknown";
}

std::optional<Provenance> parse_provenance(std::string_view name) {
    for (const auto& [tag, known] : kNames)
        if (known == name) return tag;
    return std::nullopt;
}

void Spectrum::push(SpectrumEntry e) {
    if (!entries_.empty() && e.n <= entries_.back().n)
        throw Error("spectrum entries must be strictly ordered by n");
    entries_.push_back(std::move(e));
}

}  // namespace aim
