#include "bk/datasets.hpp"

namespace bk {

namespace {

Lattice lattice_from_covers(std::vector<std::string> labels,
                            const std::vector<std::pair<std::string, std::string>>& covers) {
  return as_lattice(make_poset(std::move(labels), covers));
}

std::vector<std::string> numbered(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

Lattice dataset_n5() {
  return lattice_from_covers(numbered(5),
                             {{"1", "2"}, {"1", "3"}, {"2", "4"}, {"4", "5"}, {"3", "5"}});
}

Lattice dataset_m3() {
  return lattice_from_covers(
      numbered(5), {{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "5"}, {"3", "5"}, {"4", "5"}});
}

Lattice dataset_b3() {
  return lattice_from_covers(numbered(8), {{"1", "2"},
                                           {"1", "3"},
                                           {"1", "4"},
                                           {"2", "5"},
                                           {"2", "6"},
                                           {"3", "5"},
                                           {"3", "7"},
                                           {"4", "6"},
                                           {"4", "7"},
                                           {"5", "8"},
                                           {"6", "8"},
                                           {"7", "8"}});
}

Lattice dataset_fig4() {
  // Bottom 1; atoms 2, 7, 3; 4 = 2 v 7; 6 = 7 v 3; top 5.
  return lattice_from_covers(numbered(7), {{"1", "2"},
                                           {"1", "3"},
                                           {"1", "7"},
                                           {"2", "4"},
                                           {"7", "4"},
                                           {"7", "6"},
                                           {"3", "6"},
                                           {"4", "5"},
                                           {"6", "5"}});
}

Lattice dataset_fig4dual() {
  // Bottom 1; atoms 2, 3; 4 above 2; 5 above 2, 3; 6 above 3; top 7.
  return lattice_from_covers(numbered(7), {{"1", "2"},
                                           {"1", "3"},
                                           {"2", "4"},
                                           {"2", "5"},
                                           {"3", "5"},
                                           {"3", "6"},
                                           {"4", "7"},
                                           {"5", "7"},
                                           {"6", "7"}});
}

Lattice dataset_fig6() {
  return lattice_from_covers(numbered(14), {{"14", "11"},
                                            {"14", "12"},
                                            {"14", "13"},
                                            {"11", "9"},
                                            {"12", "9"},
                                            {"12", "10"},
                                            {"13", "10"},
                                            {"9", "8"},
                                            {"10", "8"},
                                            {"8", "1"},
                                            {"1", "2"},
                                            {"1", "3"},
                                            {"2", "4"},
                                            {"2", "5"},
                                            {"3", "5"},
                                            {"3", "6"},
                                            {"4", "7"},
                                            {"5", "7"},
                                            {"6", "7"}});
}

Lattice dataset_fig6_extension() {
  return lattice_from_covers(numbered(16), {{"14", "11"},
                                            {"14", "12"},
                                            {"14", "13"},
                                            {"11", "9"},
                                            {"12", "9"},
                                            {"12", "10"},
                                            {"13", "10"},
                                            {"9", "8"},
                                            {"10", "8"},
                                            {"8", "1"},
                                            {"1", "2"},
                                            {"1", "3"},
                                            {"2", "4"},
                                            {"2", "5"},
                                            {"3", "5"},
                                            {"3", "6"},
                                            {"4", "7"},
                                            {"5", "7"},
                                            {"6", "7"},
                                            {"11", "15"},
                                            {"13", "15"},
                                            {"15", "8"},
                                            {"1", "16"},
                                            {"16", "4"},
                                            {"16", "6"}});
}

FormalContext dataset_uk() {
  std::vector<std::string> objects = {"England",         "Scotland", "Wales",
                                      "Northern Ireland", "Ireland (State)", "Isle of Man",
                                      "Jersey",          "Guernsey"};
  std::vector<std::string> attributes = {"British Isles", "Ireland (Island)", "GB",
                                         "British Islands", "UK", "Channel Islands"};
  auto row = [&](std::vector<std::string> have) {
    Mask r = 0;
    for (auto& a : have) {
      for (std::size_t i = 0; i < attributes.size(); ++i)
        if (attributes[i] == a) r |= bit(static_cast<int>(i));
    }
    return r;
  };
  std::vector<Mask> rows = {
      row({"British Isles", "GB", "British Islands", "UK"}),                // England
      row({"British Isles", "GB", "British Islands", "UK"}),                // Scotland
      row({"British Isles", "GB", "British Islands", "UK"}),                // Wales
      row({"British Isles", "Ireland (Island)", "British Islands", "UK"}),  // Northern Ireland
      row({"British Isles", "Ireland (Island)"}),                           // Ireland (State)
      row({"British Isles", "British Islands"}),                            // Isle of Man
      row({"British Isles", "British Islands", "Channel Islands"}),         // Jersey
      row({"British Isles", "British Islands", "Channel Islands"}),         // Guernsey
  };
  return make_context(std::move(objects), std::move(attributes), std::move(rows));
}

const std::vector<Dataset>& bundled_datasets() {
  static const std::vector<Dataset> sets = [] {
    std::vector<Dataset> out;
    out.push_back({"m3", "lattice", "five elements, modular, not distributive", dataset_m3()});
    out.push_back({"n5", "lattice", "five elements, not modular", dataset_n5()});
    out.push_back({"b3", "lattice", "Boolean lattice with three atoms", dataset_b3()});
    out.push_back({"fig4", "lattice",
                   "seven elements; completions of sizes 8 (ideals) and 9 (filters)",
                   dataset_fig4()});
    out.push_back({"fig4dual", "lattice",
                   "order dual of fig4; completion sizes swap to 9 and 8", dataset_fig4dual()});
    out.push_back({"fig6", "lattice",
                   "fourteen elements; embeds into a 16-element distributive lattice "
                   "although both completions have 17 elements",
                   dataset_fig6()});
    out.push_back({"uk", "context",
                   "administrative geography of the United Kingdom and surrounding islands",
                   dataset_uk()});
    return out;
  }();
  return sets;
}

}  // namespace bk
