#pragma once

#include "symhecke/monodromy.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symhecke {

inline constexpr const char* kToolVersion = "1.0.0";

struct Expected {
    std::optional<int> order_Wa;
    std::optional<std::vector<int>> deltas;
    std::optional<int> I_rank;
    std::optional<std::vector<int>> W0_orders;
};

struct CatalogEntry {
    std::string name;
    std::string source;  // file the entry was read from, if any
    IntMat cartan;
    IntMat theta;
    std::vector<std::vector<int>> kernel_N;
    std::vector<int> tau;
    std::string notes;
    Expected expected;
    std::string canonical;  // canonical JSON dump, the input of the hash
    std::uint32_t input_hash = 0;
};

CatalogEntry parse_entry(const std::string& json_text, const std::string& source = "");
CatalogEntry read_entry_file(const std::string& path);
// All *.json entries of a directory, sorted by name.
std::vector<CatalogEntry> load_catalog(const std::string& dir);
// A catalog name or a path to an entry file.
CatalogEntry resolve_entry(const std::string& dir, const std::string& pair);

PairData build_pair(const CatalogEntry& e);

std::string sigma_type(const PairData& P);
std::string describe(const CatalogEntry& e, const PairData& P);
std::string chi_string(const Character& chi);
Character parse_chi(const std::string& text, int rank);

nlohmann::ordered_json module_json(const PairData& P, const Character& chi);
// Matrices read back from a module document, keyed like the document.
struct ParsedModule {
    std::vector<IntMat> lambda;
    std::vector<std::vector<int>> i_action;
    std::optional<std::vector<IntMat>> mu;
};
ParsedModule parse_module(const nlohmann::ordered_json& doc);

struct VerifyOptions {
    std::uint64_t seed = 1;
    int trials = 100;
    int matsumoto_elements = 100;
    int induced_max_order = 8;
    int quotient_max_order = 48;
};

struct ScopedCheck {
    std::string scope;  // "pair" or a character
    CheckResult check;
};

struct PairReport {
    std::string pair;
    std::uint32_t input_hash = 0;
    bool pass = true;
    std::vector<ScopedCheck> checks;
};

PairReport verify_pair(const CatalogEntry& e, const VerifyOptions& opt);
nlohmann::ordered_json report_json(const std::vector<PairReport>& reports, const VerifyOptions& opt);

}  // namespace symhecke
