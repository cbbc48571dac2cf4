#pragma once

#include <optional>
#include <string>

#include "lrc/core.hpp"
#include "lrc/errors.hpp"
#include "lrc/evaluator.hpp"
#include "lrc/reduction.hpp"

namespace lrc {

struct RunReport {
    std::string command;
    std::string instanceDigest;
    std::string solver;
    long long contacts = 0;
    std::optional<long long> optReference;
    std::optional<std::pair<long long, long long>> ratio;  // reduced fraction
    double wallMs = 0.0;
    std::optional<long long> visitedStates;
    std::optional<long long> stateBound;
};

std::string serializeInstance(const LayeredGraph& g);
LayeredGraph parseInstance(const std::string& text);

std::string serializeRepresentation(const Representation& r);
Representation parseRepresentation(const std::string& text);

std::string serializeFormula(const RectilinearFormula& f);
RectilinearFormula parseFormula(const std::string& text);

std::string serializeReport(const RunReport& r);
RunReport parseReport(const std::string& text);

/// FNV-1a over the canonical serialization, hex encoded.
std::string instanceDigest(const LayeredGraph& g);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& content);

} // namespace lrc
