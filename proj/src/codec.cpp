#include "einf/codec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace einf {

namespace {

template <class Seq>
std::string join_ints(const Seq& seq, char sep) {
  std::string out;
  bool first = true;
  for (auto v : seq) {
    if (!first) out += sep;
    out += std::to_string(v);
    first = false;
  }
  return out;
}

template <class Basis>
std::string encode_chain(const LinearCombination<Basis>& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, coeff] : c.terms()) {
    const Coefficient mag = coeff < 0 ? -coeff : coeff;
    if (first) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += encode(b);
    first = false;
  }
  return out;
}

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t offset = 0) : text_(text), offset_(offset) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }
  std::size_t where() const { return offset_ + pos_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(where(), what); }

  long long integer() {
    skip_ws();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    long long value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  /// Maximal run of characters in [0-9,; ].
  std::string_view basis_run() {
    const std::size_t start = pos_;
    while (!done()) {
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch)) || ch == ',' || ch == ';' || ch == ' ') {
        advance();
        continue;
      }
      break;
    }
    std::size_t stop = pos_;
    while (stop > start && text_[stop - 1] == ' ') --stop;
    return text_.substr(start, stop - start);
  }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

Word parse_word(std::string_view text, std::size_t offset) {
  Cursor cur(text, offset);
  Word out;
  cur.skip_ws();
  if (cur.done()) cur.fail("empty word");
  for (;;) {
    const long long v = cur.integer();
    if (v < 1 || v > 1'000'000) cur.fail("letter out of range");
    out.push_back(static_cast<Letter>(v));
    cur.skip_ws();
    if (cur.done()) break;
    if (cur.peek() != ',') cur.fail("expected ','");
    cur.advance();
  }
  return out;
}

Simplex parse_simplex(std::string_view text, std::size_t offset) {
  std::vector<Permutation> vertices;
  std::size_t start = 0;
  for (;;) {
    const std::size_t semi = text.find(';', start);
    const std::string_view piece = text.substr(start, semi == std::string_view::npos ? semi : semi - start);
    vertices.emplace_back(parse_word(piece, offset + start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return Simplex(std::move(vertices));
}

// chain := "0" | term (("+" | "-") term)*,  term := [sign] [coeff "*"] basis
template <class Basis, class ParseBasis>
LinearCombination<Basis> parse_chain(std::string_view text, ParseBasis parse_basis) {
  Cursor cur(text);
  cur.skip_ws();
  LinearCombination<Basis> out;
  if (cur.peek() == '0') {
    Cursor probe = cur;
    probe.advance();
    probe.skip_ws();
    if (probe.done()) return out;
  }
  bool first = true;
  while (true) {
    cur.skip_ws();
    if (cur.done()) {
      if (first) cur.fail("empty chain");
      break;
    }
    Coefficient sign = 1;
    if (cur.peek() == '+' || cur.peek() == '-') {
      sign = cur.peek() == '-' ? -1 : 1;
      cur.advance();
      cur.skip_ws();
    } else if (!first) {
      cur.fail("expected '+' or '-' between terms");
    }
    std::size_t at = cur.where();
    std::string_view run = cur.basis_run();
    Coefficient coeff = 1;
    cur.skip_ws();
    if (cur.peek() == '*') {
      Cursor num(run, at);
      coeff = num.integer();
      num.skip_ws();
      if (!num.done()) num.fail("bad coefficient");
      cur.advance();
      cur.skip_ws();
      at = cur.where();
      run = cur.basis_run();
    }
    if (run.empty()) cur.fail("expected a basis element");
    Basis b = parse_basis(run, at);
    if (out.is_zero() && out.arity() == 0) out = LinearCombination<Basis>(basis_arity(b), basis_degree(b));
    out.add(b, sign * coeff);
    first = false;
  }
  return out;
}

template <class Basis>
nlohmann::json chain_json(const LinearCombination<Basis>& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [b, coeff] : c.terms()) terms.push_back({{"coefficient", coeff}, {"basis", encode(b)}});
  return {{"arity", c.arity()}, {"degree", c.degree()}, {"terms", terms}};
}

}  // namespace

std::string encode(const Word& w) { return join_ints(w, ','); }
std::string encode(const Permutation& w) { return join_ints(w.word(), ','); }
std::string encode(const Surjection& u) { return join_ints(u.word(), ','); }
std::string encode(const VertexCoord& x) { return join_ints(x.coords, ','); }
std::string encode(const LatticePath& p) { return join_ints(p.steps, ','); }

std::string encode(const Simplex& s) {
  std::string out;
  for (std::size_t i = 0; i < s.vertices().size(); ++i) {
    if (i) out += ';';
    out += encode(s.vertices()[i]);
  }
  return out;
}

std::string encode(const EChain& c) { return encode_chain(c); }
std::string encode(const XChain& c) { return encode_chain(c); }

Word decode_word(std::string_view text) { return parse_word(text, 0); }

Permutation decode_permutation(std::string_view text) { return Permutation(parse_word(text, 0)); }

Surjection decode_surjection(std::string_view text, std::optional<int> arity) {
  Word w = parse_word(text, 0);
  const int r = arity ? *arity : *std::max_element(w.begin(), w.end());
  return validate_surjection(std::move(w), r);
}

Simplex decode_simplex(std::string_view text) { return parse_simplex(text, 0); }

EChain decode_echain(std::string_view text) {
  return parse_chain<Simplex>(text, [](std::string_view run, std::size_t at) {
    Simplex s = parse_simplex(run, at);
    if (s.is_degenerate()) throw Error(ErrorCode::degenerate, "degenerate simplex " + encode(s) + " in chain");
    return s;
  });
}

XChain decode_xchain(std::string_view text, std::optional<int> arity) {
  return parse_chain<Surjection>(text, [arity](std::string_view run, std::size_t at) {
    Word w = parse_word(run, at);
    const int r = arity ? *arity : *std::max_element(w.begin(), w.end());
    return validate_surjection(std::move(w), r);
  });
}

nlohmann::json to_json(const EChain& c) { return chain_json(c); }
nlohmann::json to_json(const XChain& c) { return chain_json(c); }

nlohmann::json to_json(const ComplexityMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (Letter i = 1; i <= m.arity(); ++i)
    for (Letter j = i + 1; j <= m.arity(); ++j) out.push_back({{"i", i}, {"j", j}, {"c", m.at(i, j)}});
  return out;
}

nlohmann::json to_json(const CellDescriptor& cell) {
  nlohmann::json orient = nlohmann::json::array();
  const int r = cell.arity();
  for (Letter i = 1; i <= r; ++i)
    for (Letter j = i + 1; j <= r; ++j) {
      const bool ij = cell.i_before_j[pair_index(r, i, j)];
      orient.push_back({{"i", i}, {"j", j}, {"last", ij ? std::to_string(i) + "-then-" + std::to_string(j)
                                                         : std::to_string(j) + "-then-" + std::to_string(i)}});
    }
  return {{"complexity", to_json(cell.mu)}, {"orientation", orient}};
}

namespace {

template <class Basis, class Decode>
LinearCombination<Basis> chain_from_json(const nlohmann::json& j, Decode decode) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError(0, "chain record needs a \"terms\" array");
  LinearCombination<Basis> out(j.value("arity", 0), j.value("degree", 0));
  for (const auto& t : j["terms"]) {
    if (!t.contains("coefficient") || !t.contains("basis")) throw ParseError(0, "term needs coefficient and basis");
    const Basis b = decode(t["basis"].template get<std::string>(), out.arity());
    out.add(b, t["coefficient"].template get<Coefficient>());
  }
  return out;
}

}  // namespace

EChain echain_from_json(const nlohmann::json& j) {
  return chain_from_json<Simplex>(j, [](const std::string& text, int) {
    Simplex s = decode_simplex(text);
    if (s.is_degenerate()) throw Error(ErrorCode::degenerate, "degenerate simplex " + text);
    return s;
  });
}

XChain xchain_from_json(const nlohmann::json& j) {
  return chain_from_json<Surjection>(j, [](const std::string& text, int arity) {
    return decode_surjection(text, arity > 0 ? std::optional<int>(arity) : std::nullopt);
  });
}

}  // namespace einf
