#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "smps/mps.hpp"
#include "smps/orbitals.hpp"

namespace smps {

// Orbital file: {"L": int, "N": int, "orbitals": [[[re, im] x L] x N]}.
OrbitalSet read_orbitals_json(std::istream& in);
OrbitalSet read_orbitals_file(const std::filesystem::path& path);
void write_orbitals_json(std::ostream& out, const OrbitalSet& set);

// Amplitude dump line: {"occ": "0110...", "re": float, "im": float}.
struct AmplitudeEntry {
    Occupation occ;
    Complex value;
};

std::vector<AmplitudeEntry> read_amplitudes_jsonl(std::istream& in, int num_sites);
void write_amplitude_line(std::ostream& out, const Occupation& occ, const Complex& value);

} // namespace smps
