#include "smps/json_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

namespace smps {

using json = nlohmann::ordered_json;

OrbitalSet read_orbitals_json(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw validation_error(std::string("orbital file: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("L") || !doc.contains("N") || !doc.contains("orbitals"))
        throw validation_error("orbital file: expected keys L, N, orbitals");
    const int L = doc["L"].get<int>();
    const int N = doc["N"].get<int>();
    if (L < 1 || N < 0)
        throw validation_error("orbital file: requires L >= 1 and N >= 0");
    const auto& rows = doc["orbitals"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != N)
        throw validation_error("orbital file: expected " + std::to_string(N) + " orbital rows");
    CMatrix phi(N, L);
    for (int r = 0; r < N; ++r) {
        const auto& row = rows[r];
        if (!row.is_array() || static_cast<int>(row.size()) != L)
            throw validation_error("orbital file: row " + std::to_string(r + 1) +
                                   " does not hold L entries");
        for (int c = 0; c < L; ++c) {
            const auto& entry = row[c];
            if (!entry.is_array() || entry.size() != 2)
                throw validation_error("orbital file: entries must be [re, im] pairs");
            phi(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    if (!phi.allFinite())
        throw validation_error("orbital file: entries must be finite");
    return OrbitalSet{L, N, std::move(phi)};
}

OrbitalSet read_orbitals_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw validation_error("orbital file: cannot open " + path.string());
    return read_orbitals_json(in);
}

void write_orbitals_json(std::ostream& out, const OrbitalSet& set) {
    json rows = json::array();
    for (int r = 0; r < set.num_orbitals; ++r) {
        json row = json::array();
        for (int c = 0; c < set.num_sites; ++c)
            row.push_back({set.phi(r, c).real(), set.phi(r, c).imag()});
        rows.push_back(std::move(row));
    }
    const json doc = {{"L", set.num_sites}, {"N", set.num_orbitals}, {"orbitals", std::move(rows)}};
    out << doc.dump() << "\n";
}

std::vector<AmplitudeEntry> read_amplitudes_jsonl(std::istream& in, int num_sites) {
    std::vector<AmplitudeEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json doc;
        try {
            doc = json::parse(line);
        } catch (const json::exception& e) {
            throw validation_error("amplitude file: line " + std::to_string(line_no) +
                                   " is not valid JSON: " + e.what());
        }
        if (!doc.contains("occ") || !doc.contains("re") || !doc.contains("im"))
            throw validation_error("amplitude file: line " + std::to_string(line_no) +
                                   " needs keys occ, re, im");
        AmplitudeEntry entry;
        entry.occ = Occupation::from_string(doc["occ"].get<std::string>());
        if (entry.occ.size() != num_sites)
            throw validation_error("amplitude file: line " + std::to_string(line_no) +
                                   " has an occupation of the wrong length");
        entry.value = Complex(doc["re"].get<double>(), doc["im"].get<double>());
        entries.push_back(std::move(entry));
    }
    return entries;
}

void write_amplitude_line(std::ostream& out, const Occupation& occ, const Complex& value) {
    const json doc = {{"occ", occ.to_string()}, {"re", value.real()}, {"im", value.imag()}};
    out << doc.dump() << "\n";
}

} // namespace smps
