#include "cohen/text.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "cohen/error.hpp"

namespace cohen {
namespace {

struct Scanner {
  const std::string& s;
  size_t pos = 0;

  explicit Scanner(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(what + " at position " + std::to_string(pos) + " in \"" + s + "\"");
  }

  // unsigned digit run
  mpz_class digits() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected number");
    return mpz_class(s.substr(start, pos - start));
  }

  mpz_class signed_int() {
    skip_ws();
    bool neg = accept('-');
    if (!neg) accept('+');
    mpz_class v = digits();
    return neg ? mpz_class(-v) : v;
  }

  int index() {
    mpz_class v = digits();
    if (!v.fits_sint_p()) fail("index too large");
    return static_cast<int>(v.get_si());
  }
};

int checked_index(Scanner& sc, int n) {
  int i = sc.index();
  if (i < 1 || i > n) sc.fail("index out of range 1.." + std::to_string(n));
  return i;
}

// ---- element text ----

Monomial parse_monomial(Scanner& sc, int n, int k) {
  Monomial m;
  if (k == 1) {
    sc.expect('y', "'y'");
    m.idx.push_back(checked_index(sc, n));
    while (sc.accept('.')) {
      sc.expect('y', "'y'");
      m.idx.push_back(checked_index(sc, n));
    }
    return m;
  }
  auto block = [&]() {
    sc.expect('{', "'{'");
    int arity = 0;
    do {
      sc.accept('y');  // tolerated, canonical form is bare
      m.idx.push_back(checked_index(sc, n));
      ++arity;
    } while (sc.accept('|'));
    sc.expect('}', "'}'");
    if (arity != k) sc.fail("block arity must be " + std::to_string(k));
  };
  block();
  while (sc.accept('.')) block();
  return m;
}

std::string monomial_text(const Monomial& m, int k) {
  std::string out;
  if (k == 1) {
    for (size_t i = 0; i < m.idx.size(); ++i) {
      if (i) out += '.';
      out += 'y';
      out += std::to_string(m.idx[i]);
    }
    return out;
  }
  for (int b = 0; b < m.blocks(k); ++b) {
    if (b) out += '.';
    out += '{';
    for (int j = 0; j < k; ++j) {
      if (j) out += '|';
      out += std::to_string(m.idx[b * k + j]);
    }
    out += '}';
  }
  return out;
}

std::string term_text(const mpz_class& coeff, const std::string& body, bool with_sign) {
  // with_sign: include a leading "-" for the first printed term
  mpz_class a = coeff < 0 ? mpz_class(-coeff) : coeff;
  std::string out = (with_sign && coeff < 0) ? "-" : "";
  if (body.empty()) return out + a.get_str();
  if (a == 1) return out + body;
  return out + a.get_str() + "*" + body;
}

// ---- word text ----

void append_word(GroupWord& dst, const GroupWord& src) {
  for (const auto& l : src.letters()) dst.append(l.block, l.exp);
}

GroupWord parse_word_expr(Scanner& sc, const Ring& ring, int n, int k);

GroupWord parse_factor(Scanner& sc, const Ring& ring, int n, int k) {
  char c = sc.peek();
  GroupWord w(ring, n, k);
  bool letter_atom = false;
  if (c == '1') {
    ++sc.pos;
  } else if (c == 'x') {
    ++sc.pos;
    w.append({checked_index(sc, n)}, 1);
    letter_atom = true;
  } else if (c == '{') {
    ++sc.pos;
    std::vector<int> block;
    do {
      sc.accept('x');
      block.push_back(checked_index(sc, n));
    } while (sc.accept('|'));
    sc.expect('}', "'}'");
    w.append(block, 1);
    letter_atom = true;
  } else if (c == '[') {
    ++sc.pos;
    std::vector<GroupWord> args;
    args.push_back(parse_word_expr(sc, ring, n, k));
    sc.expect(',', "','");
    args.push_back(parse_word_expr(sc, ring, n, k));
    while (sc.accept(',')) args.push_back(parse_word_expr(sc, ring, n, k));
    sc.expect(']', "']'");
    w = iterated_word_commutator(args);
  } else if (c == '(') {
    ++sc.pos;
    w = parse_word_expr(sc, ring, n, k);
    sc.expect(')', "')'");
  } else {
    sc.fail("expected word factor");
  }

  if (sc.accept('^')) {
    mpz_class e = sc.signed_int();
    if (letter_atom) {
      // exponent lives in the coefficient ring
      GroupWord v(ring, n, k);
      v.append(w.letters().front().block, e);
      return v;
    }
    if (!e.fits_slong_p()) sc.fail("word power too large");
    return word_pow(w, e.get_si());
  }
  return w;
}

GroupWord parse_word_expr(Scanner& sc, const Ring& ring, int n, int k) {
  GroupWord w(ring, n, k);
  bool any = false;
  for (;;) {
    char c = sc.peek();
    if (c == '1' || c == 'x' || c == '{' || c == '[' || c == '(') {
      append_word(w, parse_factor(sc, ring, n, k));
      any = true;
    } else {
      break;
    }
  }
  if (!any) sc.fail("expected word");
  return w;
}

std::string letter_text(const GroupLetter& l) {
  std::string out;
  if (l.block.size() == 1) {
    out = "x" + std::to_string(l.block[0]);
  } else {
    out = "{";
    for (size_t j = 0; j < l.block.size(); ++j) {
      if (j) out += '|';
      out += 'x';
      out += std::to_string(l.block[j]);
    }
    out += '}';
  }
  if (l.exp != 1) out += "^" + l.exp.get_str();
  return out;
}

}  // namespace

std::string print_element(const AlgebraElement& a) {
  if (a.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : a.terms()) {
    std::string body = monomial_text(mono, a.k());
    if (first) {
      out = term_text(coeff, body, true);
      first = false;
    } else {
      out += coeff < 0 ? " - " : " + ";
      out += term_text(coeff, body, false);
    }
  }
  return out;
}

AlgebraElement parse_element(const Ring& ring, int n, int k, const std::string& text) {
  Scanner sc(text);
  AlgebraElement out = AlgebraElement::zero(ring, n, k);
  bool first = true;
  for (;;) {
    int sign = 1;
    if (first) {
      if (sc.accept('-')) sign = -1;
      first = false;
    } else {
      if (sc.eof()) break;
      if (sc.accept('-'))
        sign = -1;
      else
        sc.expect('+', "'+' or '-'");
    }
    char c = sc.peek();
    mpz_class coeff = 1;
    Monomial mono;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = sc.digits();
      if (sc.accept('*')) mono = parse_monomial(sc, n, k);
    } else {
      mono = parse_monomial(sc, n, k);
    }
    out.add_term(mono, sign * coeff);
  }
  if (!sc.eof()) sc.fail("unexpected trailing input");
  return out;
}

std::string print_word(const GroupWord& w) {
  if (w.letters().empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.letters().size(); ++i) {
    if (i) out += ' ';
    out += letter_text(w.letters()[i]);
  }
  return out;
}

GroupWord parse_word(const Ring& ring, int n, int k, const std::string& text) {
  Scanner sc(text);
  GroupWord w = parse_word_expr(sc, ring, n, k);
  if (!sc.eof()) sc.fail("unexpected trailing input");
  return w;
}

std::string print_tensor(const TensorElement& t) {
  if (t.terms().empty()) return "0";
  std::vector<const std::pair<const std::vector<int>, mpz_class>*> order;
  for (const auto& kv : t.terms()) order.push_back(&kv);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    if (a->first.size() != b->first.size()) return a->first.size() < b->first.size();
    return a->first < b->first;
  });
  std::string out;
  bool first = true;
  for (const auto* kv : order) {
    std::string body;
    for (size_t i = 0; i < kv->first.size(); ++i) {
      if (i) body += '.';
      body += 'v';
      body += std::to_string(kv->first[i]);
    }
    if (first) {
      out = term_text(kv->second, body, true);
      first = false;
    } else {
      out += kv->second < 0 ? " - " : " + ";
      out += term_text(kv->second, body, false);
    }
  }
  return out;
}

std::string print_cinput(const CInput& z) {
  std::string out;
  for (size_t p = 0; p < z.slots.size(); ++p) {
    if (p) out += " (x) ";
    if (z.slots[p].unit) {
      out += '1';
    } else {
      out += '[';
      for (size_t i = 0; i < z.slots[p].vec.size(); ++i) {
        if (i) out += ',';
        out += z.slots[p].vec[i].get_str();
      }
      out += ']';
    }
  }
  return out;
}

CInput parse_cinput(const Ring& ring, int dim, const std::string& text) {
  Scanner sc(text);
  std::vector<CSlot> slots;
  for (;;) {
    char c = sc.peek();
    if (c == '1') {
      ++sc.pos;
      slots.push_back(CSlot::unit_slot());
    } else if (c == '[') {
      ++sc.pos;
      std::vector<mpz_class> vec;
      vec.push_back(ring.reduce(sc.signed_int()));
      while (sc.accept(',')) vec.push_back(ring.reduce(sc.signed_int()));
      sc.expect(']', "']'");
      if (static_cast<int>(vec.size()) != dim)
        sc.fail("vector length must be " + std::to_string(dim));
      slots.push_back(CSlot::vector_slot(std::move(vec)));
    } else {
      sc.fail("expected slot '1' or '[...]'");
    }
    if (sc.eof()) break;
    sc.expect('(', "'(x)'");
    sc.expect('x', "'(x)'");
    sc.expect(')', "'(x)'");
  }
  return CInput{ring, dim, std::move(slots)};
}

}  // namespace cohen
