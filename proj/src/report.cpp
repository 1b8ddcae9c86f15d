#include "skelmc/report.hpp"

#include <iomanip>
#include <sstream>

namespace skelmc {

namespace {

Report support_json(const SupportVector& v) {
  Report arr = Report::array();
  for (std::size_t a = 0; a < v.size(); ++a) arr.push_back(v.test(static_cast<Symbol>(a)) ? 1 : 0);
  return arr;
}

Report optional_count(const std::optional<std::uint64_t>& n) { return n ? Report(*n) : Report(nullptr); }

std::string word_text(const Alphabet& alphabet, const Word& w) { return w.empty() ? "e" : alphabet.format(w); }

}  // namespace

Report word_json(const Alphabet& alphabet, const Word& w) {
  if (alphabet.single_character()) return alphabet.format(w);
  Report arr = Report::array();
  for (Symbol s : w.symbols()) arr.push_back(alphabet.label(s));
  return arr;
}

Report skeleton_report(const Skeleton& skeleton, std::size_t order, const Alphabet& alphabet) {
  Report r;
  r["order"] = order;
  r["skeleton_order"] = skeleton.order();
  Report words = Report::array();
  for (const auto& e : skeleton.entries()) {
    Report item;
    item["word"] = word_json(alphabet, e.word);
    item["support"] = support_json(e.support);
    words.push_back(std::move(item));
  }
  r["words"] = std::move(words);
  return r;
}

std::string skeleton_table(const Skeleton& skeleton, const Alphabet& alphabet) {
  std::size_t width = 4;
  for (const auto& e : skeleton.entries()) width = std::max(width, word_text(alphabet, e.word).size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "word" << "  support\n";
  for (const auto& e : skeleton.entries())
    out << std::left << std::setw(static_cast<int>(width)) << word_text(alphabet, e.word) << "  "
        << e.support.to_string() << '\n';
  return out.str();
}

Report classification_report(const Classification& c, const Alphabet& alphabet) {
  const std::size_t class_word_length = c.skeleton ? c.skeleton->order() : c.order;
  Report r;
  r["method"] = c.skeleton ? "skeleton" : "lifted";
  r["order"] = c.order;
  r["skeleton_order"] = c.skeleton ? Report(c.skeleton->order()) : Report(nullptr);
  if (c.skeleton) r["skeleton"] = skeleton_report(*c.skeleton, c.order, alphabet)["words"];
  r["N"] = c.class_count();
  Report classes = Report::array();
  for (const auto& cls : c.classes) {
    Report item;
    Report closed = Report::array();
    for (auto idx : cls.closed_class) closed.push_back(word_json(alphabet, unrank(idx, class_word_length, c.alphabet_size)));
    item["closed_class"] = std::move(closed);
    item["period"] = cls.period;
    item["recurrent_size"] = optional_count(cls.recurrent_size);
    if (cls.members) {
      Report members = Report::array();
      for (auto idx : *cls.members) members.push_back(word_json(alphabet, unrank(idx, c.order, c.alphabet_size)));
      item["recurrent_members"] = std::move(members);
    }
    classes.push_back(std::move(item));
  }
  r["classes"] = std::move(classes);
  r["transient_count"] = optional_count(c.transient_count);
  r["essentially_irreducible"] = c.essentially_irreducible;
  r["irreducible"] = c.irreducibility.irreducible;
  r["irreducible_reason"] = std::string(to_string(c.irreducibility.reason));
  return r;
}

std::string classification_text(const Classification& c, const Alphabet& alphabet) {
  const std::size_t class_word_length = c.skeleton ? c.skeleton->order() : c.order;
  auto count_text = [](const std::optional<std::uint64_t>& n) { return n ? std::to_string(*n) : std::string("overflow"); };
  std::ostringstream out;
  out << "method:                  " << (c.skeleton ? "skeleton" : "lifted") << '\n';
  out << "order m:                 " << c.order << '\n';
  if (c.skeleton) out << "skeleton order K:        " << c.skeleton->order() << '\n';
  out << "recurrent classes N:     " << c.class_count() << '\n';
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const auto& cls = c.classes[i];
    out << "  class " << i + 1 << ": period " << cls.period << ", " << count_text(cls.recurrent_size)
        << " recurrent states, " << (c.skeleton ? "closed class {" : "{");
    for (std::size_t j = 0; j < cls.closed_class.size(); ++j) {
      if (j == 8 && cls.closed_class.size() > 9) {
        out << ", ... (" << cls.closed_class.size() << " states)";
        break;
      }
      out << (j ? ", " : "") << word_text(alphabet, unrank(cls.closed_class[j], class_word_length, c.alphabet_size));
    }
    out << "}\n";
  }
  out << "transient states:        " << count_text(c.transient_count) << '\n';
  out << "essentially irreducible: " << (c.essentially_irreducible ? "yes" : "no") << '\n';
  out << "irreducible:             " << (c.irreducibility.irreducible ? "yes" : "no") << " ("
      << to_string(c.irreducibility.reason) << ")\n";
  return out.str();
}

std::string matrix_dot(const ShiftGraph& graph, const ClassDecomposition& classes, const Alphabet& alphabet) {
  static constexpr const char* kPalette[] = {"#e41a1c", "#ff7f00", "#984ea3", "#a65628", "#f781bf", "#b2182b"};
  std::vector<int> colour(graph.size(), -1);
  for (std::size_t i = 0; i < classes.closed_count(); ++i)
    for (std::size_t v : classes.closed_class(i)) colour[v] = static_cast<int>(i % std::size(kPalette));

  std::ostringstream out;
  out << "digraph skeleton_matrix {\n  node [shape=circle, style=filled, fontname=\"monospace\"];\n";
  for (std::size_t v = 0; v < graph.size(); ++v) {
    out << "  s" << v << " [label=\"" << word_text(alphabet, graph.space().word(v)) << "\", fillcolor=\""
        << (colour[v] < 0 ? "#bdbdbd" : kPalette[colour[v]]) << "\"];\n";
  }
  for (std::size_t v = 0; v < graph.size(); ++v)
    graph.for_each_successor(v, [&](std::size_t w) { out << "  s" << v << " -> s" << w << ";\n"; });
  out << "}\n";
  return out.str();
}

}  // namespace skelmc
