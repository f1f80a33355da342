#include <cctype>
#include <charconv>
#include <limits>

#include "einf/cli.hpp"
#include "einf/format.hpp"

namespace einf::cli {

std::string_view to_string(ElementKind k) {
  switch (k) {
    case ElementKind::surjection: return "surjection";
    case ElementKind::perm_ring: return "perm-ring";
    case ElementKind::barratt_eccles: return "barratt-eccles";
    case ElementKind::simplicial: return "simplicial";
    case ElementKind::cubical: return "cubical";
  }
  return "";
}

std::optional<ElementKind> parse_kind(std::string_view name) {
  for (auto k : {ElementKind::surjection, ElementKind::perm_ring, ElementKind::barratt_eccles,
                 ElementKind::simplicial, ElementKind::cubical})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

ElementKind kind_of(const AnyElement& e) { return static_cast<ElementKind>(e.index()); }

std::string render_text(const AnyElement& e) {
  return std::visit([](const auto& x) { return to_text(x); }, e);
}

namespace {

struct Node {
  bool leaf = false;
  long long value = 0;
  std::vector<Node> items;
  std::size_t column = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t column() {
    skip_space();
    return pos_ + 1;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) {
    const std::size_t col = column();
    if (pos_ >= text_.size()) throw ParseError(what + ", got end of input", col);
    throw ParseError(what + ", got '" + text_[pos_] + "'", col);
  }

  long long integer() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, value);
    (void)ptr;
    if (ec != std::errc()) throw ParseError("integer out of range", start + 1);
    return negative ? -value : value;
  }

  Node tuple() {
    Node node;
    node.column = column();
    expect('(');
    if (peek() == ')') {
      ++pos_;
      return node;
    }
    for (;;) {
      if (peek() == '(') {
        node.items.push_back(tuple());
      } else {
        Node leaf;
        leaf.leaf = true;
        leaf.column = column();
        leaf.value = integer();
        node.items.push_back(leaf);
      }
      if (peek() == ')') {
        ++pos_;
        return node;
      }
      expect(',');
      if (peek() == ')') {
        ++pos_;
        return node;
      }
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<int> flat(const Node& node, const char* what) {
  std::vector<int> out;
  for (const auto& item : node.items) {
    if (!item.leaf) throw ShapeError(std::string(what) + " entries must be integers", item.column);
    if (item.value < std::numeric_limits<int>::min() || item.value > std::numeric_limits<int>::max())
      throw ParseError("integer out of range", item.column);
    out.push_back(static_cast<int>(item.value));
  }
  return out;
}

std::vector<std::vector<int>> nested(const Node& node, const char* what) {
  std::vector<std::vector<int>> out;
  for (const auto& item : node.items) {
    if (item.leaf)
      throw ShapeError(std::string(what) + " entries must be tuples", item.column);
    out.push_back(flat(item, what));
  }
  return out;
}

template <typename Element, typename MakeKey>
void add_parsed(Element& e, const Node& node, Coefficient c, MakeKey&& make) {
  try {
    e.add_term(make(node), c);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& ex) {
    throw ShapeError(ex.what(), node.column);
  }
}

AnyElement make_empty(ElementKind kind, Torsion t, Convention convention) {
  switch (kind) {
    case ElementKind::surjection: return SurjectionElement(convention, t);
    case ElementKind::perm_ring: return SymmetricRingElement(t);
    case ElementKind::barratt_eccles: return BarrattEcclesElement(t);
    case ElementKind::simplicial: return SimplicialElement(t);
    case ElementKind::cubical: return CubicalElement(t);
  }
  return SurjectionElement(convention, t);
}

void add_node(AnyElement& e, const Node& node, Coefficient c) {
  std::visit(
      [&](auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SymmetricRingElement>) {
          add_parsed(x, node, c, [](const Node& n) { return Permutation(flat(n, "permutation")); });
        } else if constexpr (std::is_same_v<T, SurjectionElement>) {
          add_parsed(x, node, c, [](const Node& n) { return Surjection(flat(n, "surjection")); });
        } else if constexpr (std::is_same_v<T, BarrattEcclesElement>) {
          add_parsed(x, node, c, [](const Node& n) {
            std::vector<Permutation> coords;
            for (auto& v : nested(n, "Barratt-Eccles simplex")) coords.emplace_back(std::move(v));
            return BarrattEcclesSimplex(std::move(coords));
          });
        } else if constexpr (std::is_same_v<T, SimplicialElement>) {
          add_parsed(x, node, c,
                     [](const Node& n) { return SimplexTensor(nested(n, "simplicial tensor")); });
        } else {
          add_parsed(x, node, c,
                     [](const Node& n) { return CubeTensor(nested(n, "cubical tensor")); });
        }
      },
      e);
}

}  // namespace

AnyElement parse_element(std::string_view text, ElementKind kind, Torsion torsion,
                         Convention convention) {
  AnyElement out = make_empty(kind, torsion, convention);
  Lexer lex(text);
  if (lex.done()) throw ParseError("empty element literal", 1);
  if (lex.peek() == '0') {
    const long long zero = lex.integer();
    if (zero == 0 && lex.done()) return out;
    lex.fail("expected end of input");
  }
  bool first = true;
  while (!lex.done()) {
    int sign = 1;
    const char c = lex.peek();
    if (c == '+' || c == '-') {
      lex.expect(c);
      sign = c == '-' ? -1 : 1;
    } else if (!first) {
      lex.fail("expected '+' or '-'");
    }
    Coefficient coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) coeff = lex.integer();
    if (lex.peek() != '(') lex.fail("expected '('");
    const Node node = lex.tuple();
    if (node.items.empty()) throw ShapeError("empty basis tuple", node.column);
    add_node(out, node, detail::checked_mul(coeff, sign));
    first = false;
  }
  return out;
}

}  // namespace einf::cli
