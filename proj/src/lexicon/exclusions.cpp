#include "emodyn/lexicon/exclusions.hpp"

#include <algorithm>
#include <cctype>

#include "emodyn/common/io.hpp"

namespace emodyn::lexicon {

namespace {
std::string normalize(std::string_view word) {
  std::string out(word);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}
}  // namespace

ExclusionList::ExclusionList(std::vector<std::string> words) {
  for (auto& w : words) words_.insert(normalize(w));
}

ExclusionList ExclusionList::vaccine_variants() {
  return ExclusionList({"vaccine", "vaccines", "vaccination", "vaccinations", "vaccinate", "vaccinated",
                        "vaccinating"});
}

ExclusionList ExclusionList::illness_terms() {
  return ExclusionList({"flu",       "influenza", "polio",    "amnesia",   "measles",  "mumps",      "rubella",
                        "smallpox",  "tetanus",   "diphtheria", "pertussis", "hepatitis", "tuberculosis", "malaria",
                        "cholera",   "rabies",    "ebola",    "hiv",       "aids",     "cancer",     "autism",
                        "disease",   "illness",   "sickness", "infection", "virus",    "pneumonia",  "fever",
                        "depression", "anxiety",  "dementia", "schizophrenia", "insanity", "diabetes", "epidemic",
                        "pandemic",  "plague",    "leprosy",  "shingles",  "chickenpox", "meningitis", "covid"});
}

ExclusionList ExclusionList::defaults() {
  ExclusionList out = vaccine_variants();
  out.merge(illness_terms());
  return out;
}

ExclusionList ExclusionList::load(const std::filesystem::path& path) {
  ExclusionList out;
  for_each_line(path, [&](std::size_t, std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) return;
    const auto last = line.find_last_not_of(" \t");
    out.words_.insert(normalize(line.substr(first, last - first + 1)));
  });
  return out;
}

void ExclusionList::merge(const ExclusionList& other) { words_.insert(other.words_.begin(), other.words_.end()); }

bool ExclusionList::contains(std::string_view word) const { return words_.find(word) != words_.end(); }

}  // namespace emodyn::lexicon
