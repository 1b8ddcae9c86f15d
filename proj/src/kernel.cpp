#include "skelmc/kernel.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace skelmc {

namespace {

constexpr double kProbabilitySumTolerance = 1e-9;

std::string describe(const Alphabet& alphabet, const Word& w) {
  return w.empty() ? std::string("<empty>") : alphabet.format(w);
}

}  // namespace

SupportKernel::SupportKernel(Alphabet alphabet, std::size_t order, std::vector<Context> contexts,
                             SupportVector default_support)
    : alphabet_(std::move(alphabet)),
      order_(order),
      contexts_(std::move(contexts)),
      default_support_(std::move(default_support)) {
  if (alphabet_.size() == 0) throw KernelError("alphabet must contain at least one symbol");
  if (order_ == 0) throw KernelError("order must be at least 1");
  build_trie();
  validate();
}

SupportKernel::SupportKernel(Alphabet alphabet, std::size_t order, std::vector<Context> contexts)
    : SupportKernel(alphabet, order, std::move(contexts), SupportVector(alphabet.size(), true)) {}

void SupportKernel::build_trie() {
  const std::size_t n = alphabet_.size();
  trie_.assign(1, TrieNode{});
  for (std::size_t c = 0; c < contexts_.size(); ++c) {
    const Word& s = contexts_[c].suffix;
    if (s.empty()) throw KernelError("context suffix must be non-empty (use default_support)");
    if (s.size() > order_)
      throw KernelError("context '" + describe(alphabet_, s) + "' is longer than the order " +
                        std::to_string(order_));
    std::int32_t node = 0;
    for (std::size_t i = s.size(); i-- > 0;) {
      if (s[i] >= n) throw KernelError("context contains an out-of-range symbol index");
      if (trie_[node].children.empty()) trie_[node].children.assign(n, -1);
      std::int32_t child = trie_[node].children[s[i]];
      if (child < 0) {
        child = static_cast<std::int32_t>(trie_.size());
        trie_[node].children[s[i]] = child;
        trie_.push_back(TrieNode{});
      }
      node = child;
    }
    if (trie_[node].context >= 0)
      throw KernelError("duplicate context suffix '" + describe(alphabet_, s) + "'");
    trie_[node].context = static_cast<std::int32_t>(c);
    max_context_length_ = std::max(max_context_length_, s.size());
  }
}

void SupportKernel::validate() const {
  const std::size_t n = alphabet_.size();
  if (default_support_.size() != n) throw KernelError("default_support has the wrong length");

  for (const auto& ctx : contexts_) {
    const std::string name = describe(alphabet_, ctx.suffix);
    if (ctx.support.size() != n) throw KernelError("context '" + name + "': support has the wrong length");
    if (!ctx.probs) continue;
    const auto& probs = *ctx.probs;
    if (probs.size() != n) throw KernelError("context '" + name + "': probs has the wrong length");
    double sum = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      if (!(probs[a] >= 0.0) || !std::isfinite(probs[a]))
        throw KernelError("context '" + name + "': probabilities must be finite and non-negative");
      if ((probs[a] > 0.0) != ctx.support.test(static_cast<Symbol>(a)))
        throw KernelError("context '" + name + "': probs/support mismatch at symbol '" +
                          alphabet_.label(static_cast<Symbol>(a)) + "'");
      sum += probs[a];
    }
    if (std::abs(sum - 1.0) > kProbabilitySumTolerance)
      throw KernelError("context '" + name + "': probabilities sum to " + std::to_string(sum));
  }

  // An all-false row is only an error if some x in A^m actually resolves to
  // it. Search the trie below the offending node for a completion that no
  // longer listed context covers.
  auto find_witness = [&](std::int32_t start, const Word& start_word) -> std::optional<Word> {
    struct Frame {
      std::int32_t node;
      Word word;
    };
    std::vector<Frame> stack{{start, start_word}};
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      if (f.word.size() == order_) return f.word;
      const auto& children = trie_[f.node].children;
      for (std::size_t c = 0; c < n; ++c) {
        const std::int32_t child = children.empty() ? -1 : children[c];
        Word extended = f.word.prepended(static_cast<Symbol>(c));
        if (child < 0) {
          while (extended.size() < order_) extended = extended.prepended(0);
          return extended;
        }
        if (trie_[child].context < 0) stack.push_back({child, std::move(extended)});
      }
    }
    return std::nullopt;
  };

  if (!default_support_.any()) {
    if (auto w = find_witness(0, Word{}))
      throw KernelError("all-false support row: context '" + describe(alphabet_, *w) +
                        "' falls back to the default support, which allows no symbol");
  }
  for (const auto& ctx : contexts_) {
    if (ctx.support.any()) continue;
    if (auto w = find_witness(find_node(ctx.suffix), ctx.suffix))
      throw KernelError("all-false support row: context '" + describe(alphabet_, *w) +
                        "' resolves to suffix '" + describe(alphabet_, ctx.suffix) +
                        "', which allows no symbol");
  }
}

std::int32_t SupportKernel::find_node(const Word& w) const {
  std::int32_t node = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    const auto& children = trie_[node].children;
    if (children.empty() || w[i] >= children.size() || children[w[i]] < 0) return -1;
    node = children[w[i]];
  }
  return node;
}

const SupportVector& SupportKernel::resolve(std::span<const Symbol> history) const {
  const SupportVector* best = &default_support_;
  std::int32_t node = 0;
  for (std::size_t i = history.size(); i-- > 0;) {
    const auto& children = trie_[node].children;
    if (children.empty()) break;
    node = children[history[i]];
    if (node < 0) break;
    if (trie_[node].context >= 0) best = &contexts_[trie_[node].context].support;
  }
  return *best;
}

const SupportVector& SupportKernel::effective_support(const Word& x) const {
  if (x.size() != order_)
    throw KernelError("context length " + std::to_string(x.size()) + " does not match order " +
                      std::to_string(order_));
  return resolve(x.symbols());
}

bool SupportKernel::has_longer_context(const Word& w) const {
  const std::int32_t node = find_node(w);
  return node >= 0 && !trie_[node].children.empty();
}

// ---------------------------------------------------------------------------
// Document format

namespace {

using nlohmann::json;

Word parse_suffix(const Alphabet& alphabet, const json& j) {
  if (j.is_string()) {
    try {
      return alphabet.parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw KernelError(std::string("suffix '") + j.get<std::string>() + "': " + e.what());
    }
  }
  if (j.is_array()) {
    std::vector<Symbol> symbols;
    for (const auto& label : j) {
      if (!label.is_string()) throw KernelError("suffix list entries must be strings");
      auto idx = alphabet.index_of(label.get<std::string>());
      if (!idx) throw KernelError("unknown symbol label '" + label.get<std::string>() + "'");
      symbols.push_back(*idx);
    }
    return Word(std::move(symbols));
  }
  throw KernelError("suffix must be a string or a list of labels");
}

SupportVector parse_support(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    throw KernelError(where + ": support must be a list of " + std::to_string(n) + " entries");
  SupportVector v(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto& e = j[a];
    if (e.is_boolean()) {
      v.set(static_cast<Symbol>(a), e.get<bool>());
    } else if (e.is_number_integer() && (e.get<int>() == 0 || e.get<int>() == 1)) {
      v.set(static_cast<Symbol>(a), e.get<int>() == 1);
    } else {
      throw KernelError(where + ": support entries must be 0/1 or booleans");
    }
  }
  return v;
}

}  // namespace

SupportKernel parse_kernel(std::string_view text, const ParseOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw KernelError(std::string("malformed kernel document: ") + e.what());
  }
  if (!doc.is_object()) throw KernelError("malformed kernel document: expected an object");

  try {
    if (!doc.contains("alphabet") || !doc["alphabet"].is_array())
      throw KernelError("missing 'alphabet' list");
    Alphabet alphabet;
    try {
      alphabet = Alphabet(doc["alphabet"].get<std::vector<std::string>>());
    } catch (const std::invalid_argument& e) {
      throw KernelError(e.what());
    }
    const std::size_t n = alphabet.size();

    if (!doc.contains("order") || !doc["order"].is_number_integer() || doc["order"].get<long long>() < 1)
      throw KernelError("'order' must be a positive integer");
    const auto order = static_cast<std::size_t>(doc["order"].get<long long>());

    SupportVector default_support(n, true);
    if (doc.contains("default_support"))
      default_support = parse_support(doc["default_support"], n, "default_support");

    std::vector<Context> contexts;
    if (doc.contains("contexts")) {
      if (!doc["contexts"].is_array()) throw KernelError("'contexts' must be a list");
      for (const auto& c : doc["contexts"]) {
        if (!c.is_object() || !c.contains("suffix")) throw KernelError("each context needs a 'suffix'");
        Context ctx;
        ctx.suffix = parse_suffix(alphabet, c["suffix"]);
        const std::string where = "context '" + (ctx.suffix.empty() ? "" : alphabet.format(ctx.suffix)) + "'";

        if (c.contains("probs")) {
          if (!c["probs"].is_array()) throw KernelError(where + ": probs must be a list");
          std::vector<double> probs;
          for (const auto& p : c["probs"]) {
            if (!p.is_number()) throw KernelError(where + ": probs must be numbers");
            probs.push_back(p.get<double>());
          }
          ctx.probs = std::move(probs);
        }
        if (c.contains("support")) {
          ctx.support = parse_support(c["support"], n, where);
        } else if (ctx.probs) {
          if (ctx.probs->size() != n) throw KernelError(where + ": probs has the wrong length");
          ctx.support = SupportVector(n);
          for (std::size_t a = 0; a < n; ++a) ctx.support.set(static_cast<Symbol>(a), (*ctx.probs)[a] > 0.0);
        } else {
          throw KernelError(where + ": needs 'support' or 'probs'");
        }
        contexts.push_back(std::move(ctx));
      }
    }

    if (options.zero_tol <= 0.0) return SupportKernel(std::move(alphabet), order, std::move(contexts), default_support);

    // Validate the raw document first, then coerce and rebuild.
    SupportKernel raw(alphabet, order, contexts, default_support);
    for (auto& ctx : contexts) {
      if (!ctx.probs) continue;
      for (std::size_t a = 0; a < n; ++a) {
        double& p = (*ctx.probs)[a];
        if (p < options.zero_tol) p = 0.0;
        ctx.support.set(static_cast<Symbol>(a), p > 0.0);
      }
      // Coerced rows no longer sum to one; renormalize so the invariant holds.
      double sum = 0.0;
      for (double p : *ctx.probs) sum += p;
      if (sum > 0.0)
        for (double& p : *ctx.probs) p /= sum;
    }
    return SupportKernel(std::move(alphabet), order, std::move(contexts), default_support);
  } catch (const json::exception& e) {
    throw KernelError(std::string("malformed kernel document: ") + e.what());
  }
}

SupportKernel load_kernel(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw KernelError("cannot open kernel file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_kernel(buffer.str(), options);
}

std::string serialize_kernel(const SupportKernel& kernel) {
  const Alphabet& alphabet = kernel.alphabet();
  auto support_json = [](const SupportVector& v) {
    json arr = json::array();
    for (std::size_t a = 0; a < v.size(); ++a) arr.push_back(v.test(static_cast<Symbol>(a)) ? 1 : 0);
    return arr;
  };
  auto suffix_json = [&](const Word& w) -> json {
    if (alphabet.single_character()) return alphabet.format(w);
    json arr = json::array();
    for (Symbol s : w.symbols()) arr.push_back(alphabet.label(s));
    return arr;
  };

  std::ostringstream out;
  out << "{\n";
  out << "  \"alphabet\": " << json(alphabet.labels()).dump() << ",\n";
  out << "  \"order\": " << kernel.order() << ",\n";
  out << "  \"default_support\": " << support_json(kernel.default_support()).dump() << ",\n";
  out << "  \"contexts\": [";
  const auto& contexts = kernel.contexts();
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    nlohmann::ordered_json c;
    c["suffix"] = suffix_json(contexts[i].suffix);
    c["support"] = support_json(contexts[i].support);
    if (contexts[i].probs) c["probs"] = *contexts[i].probs;
    out << (i == 0 ? "\n" : ",\n") << "    " << c.dump();
  }
  out << (contexts.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

SupportKernel random_kernel(std::size_t alphabet_size, std::size_t order, double prohibition_rate,
                            std::uint64_t seed) {
  if (alphabet_size < 2) throw KernelError("random_kernel needs an alphabet of at least 2 symbols");
  if (order < 1) throw KernelError("random_kernel needs order >= 1");
  if (!(prohibition_rate >= 0.0 && prohibition_rate < 1.0))
    throw KernelError("prohibition rate must lie in [0, 1)");
  const auto rows = checked_power(alphabet_size, order);
  if (!rows || *rows > (std::uint64_t{1} << 24)) throw KernelError("random_kernel table too large");

  // Raw engine output only: distribution objects are implementation-defined.
  std::mt19937_64 engine(seed);
  auto uniform01 = [&] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };

  std::vector<Context> contexts;
  contexts.reserve(*rows);
  for (std::uint64_t x = 0; x < *rows; ++x) {
    SupportVector row(alphabet_size);
    for (std::size_t a = 0; a < alphabet_size; ++a) row.set(static_cast<Symbol>(a), !(uniform01() < prohibition_rate));
    if (!row.any()) row.set(static_cast<Symbol>(engine() % alphabet_size));
    contexts.push_back(Context{unrank(x, order, alphabet_size), std::move(row), std::nullopt});
  }
  return SupportKernel(Alphabet::numeric(alphabet_size), order, std::move(contexts));
}

}  // namespace skelmc
