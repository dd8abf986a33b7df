#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cosetchar/character_table.hpp"
#include "cosetchar/coset_theory.hpp"
#include "cosetchar/inversion.hpp"
#include "cosetchar/selftest.hpp"

namespace cosetchar {

enum class Format { kText, kJson };

/// 12 significant digits, "-0" printed as "0".
std::string format_double(double x);

std::string render_table(const CharacterTable& table, const std::string& label, Format format);

/// Per-coset reports, orbit table and, for cyclic quotients, the
/// extendability counts; `only` restricts the coset reports to one coset.
std::string render_analysis(const CosetAnalysis& analysis, const std::string& label,
                            std::optional<CosetIndex> only, Format format);

std::string render_inversion(const CosetAnalysis& analysis, const Theta& theta,
                             const std::vector<PsiComponent>& components, const std::string& label,
                             Format format);

std::string render_selftest(const SelftestSummary& summary, Format format);

}  // namespace cosetchar
