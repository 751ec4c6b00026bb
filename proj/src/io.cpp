#include "annring/io.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "annring/error.hpp"

namespace annring::io {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int column = 0;
};

class Lexer {
 public:
  Lexer(const std::string& text, std::string file) : file_(std::move(file)) {
    int line = 1, col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
      const char c = text[i];
      if (c == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
        continue;
      }
      if (c == '\n') {
        ++line;
        col = 1;
        ++i;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++col;
        ++i;
        continue;
      }
      Token t{"", line, col};
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') {
        t.text += text[i++];
        ++col;
      }
      tokens_.push_back(std::move(t));
    }
    end_line_ = line;
    end_col_ = col;
  }

  const std::string& file() const noexcept { return file_; }
  bool at_end() const noexcept { return pos_ >= tokens_.size(); }
  const Token* peek() const { return at_end() ? nullptr : &tokens_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    if (at_end()) throw ParseError(file_, end_line_, end_col_, what + " (end of file)");
    const Token& t = tokens_[pos_];
    throw ParseError(file_, t.line, t.column, what + ", found '" + t.text + "'");
  }
  [[noreturn]] void fail_previous(const std::string& what) const {
    const Token& t = tokens_[pos_ - 1];
    throw ParseError(file_, t.line, t.column, what);
  }

  const Token& next(const std::string& expected) {
    if (at_end()) fail("expected " + expected);
    return tokens_[pos_++];
  }

  void keyword(const std::string& kw) {
    if (at_end() || tokens_[pos_].text != kw) fail("expected '" + kw + "'");
    ++pos_;
  }

  std::string word(const std::string& what) { return next(what).text; }

  long integer(const std::string& what, long lo, long hi) {
    if (at_end()) fail("expected " + what);
    const Token& t = tokens_[pos_];
    long v = 0;
    const char* b = t.text.data();
    const char* e = b + t.text.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) fail("expected an integer for " + what);
    if (v < lo || v > hi)
      fail(what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    ++pos_;
    return v;
  }

  std::vector<int> indices(const std::string& kw, std::size_t count, int bound) {
    keyword(kw);
    std::vector<int> out(count);
    for (auto& x : out) x = static_cast<int>(integer("an entry of " + kw, 0, bound - 1));
    return out;
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing token");
  }

 private:
  std::string file_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int end_line_ = 1;
  int end_col_ = 1;
};

std::string resolve(const std::string& including, const std::string& path) {
  namespace fs = std::filesystem;
  const fs::path p(path);
  if (p.is_absolute() || including.empty() || including.front() == '<') return path;
  return (fs::path(including).parent_path() / p).string();
}

RingTables ring_tables(Lexer& lx) {
  lx.keyword("ring");
  RingTables t;
  t.name = lx.word("a ring name");
  lx.keyword("order");
  t.order = static_cast<int>(lx.integer("the order", 1, kMaxRingOrder));
  const auto n2 = static_cast<std::size_t>(t.order) * t.order;
  t.add = lx.indices("add", n2, t.order);
  t.mul = lx.indices("mul", n2, t.order);
  lx.keyword("unit");
  const Token* u = lx.peek();
  if (u && u->text == "none")
    lx.next("unit");
  else
    t.unit = static_cast<int>(lx.integer("the unit", 0, t.order - 1));
  return t;
}

template <class F>
auto with_position(Lexer& lx, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const AxiomError&) {
    throw;
  } catch (const Error& e) {
    lx.fail_previous(e.what());
  }
}

RingPtr ring_field(Lexer& lx) {
  const Token* t = lx.peek();
  if (!t) lx.fail("expected a ring path or inline ring");
  if (t->text == "ring") {
    RingTables tables = ring_tables(lx);
    return with_position(lx, [&] { return make_ring(std::move(tables)); });
  }
  const std::string path = resolve(lx.file(), lx.word("a ring path"));
  try {
    return load_ring(path);
  } catch (const ParseError&) {
    throw;
  } catch (const AxiomError&) {
    throw;
  } catch (const Error& e) {
    lx.fail_previous(e.what());
  }
}

ESystem esystem_block(Lexer& lx) {
  lx.keyword("esystem");
  ESystem es;
  es.name = lx.word("an E-system name");
  lx.keyword("B");
  es.B = ring_field(lx);
  lx.keyword("D");
  es.D = ring_field(lx);
  const int nb = es.B->order(), nd = es.D->order();
  es.d = lx.indices("d", nb, nd);
  const auto left = lx.indices("theta_left", static_cast<std::size_t>(nd) * nb, nb);
  const auto right = lx.indices("theta_right", static_cast<std::size_t>(nd) * nb, nb);
  es.theta.resize(nd);
  for (int x = 0; x < nd; ++x) {
    es.theta[x].left.assign(left.begin() + x * nb, left.begin() + (x + 1) * nb);
    es.theta[x].right.assign(right.begin() + x * nb, right.begin() + (x + 1) * nb);
  }
  return with_position(lx, [&] { return validate_esystem(std::move(es)); });
}

ESystem esystem_field(Lexer& lx) {
  const Token* t = lx.peek();
  if (t && t->text == "esystem") return esystem_block(lx);
  const std::string path = resolve(lx.file(), lx.word("an E-system path"));
  try {
    return load_esystem(path);
  } catch (const ParseError&) {
    throw;
  } catch (const AxiomError&) {
    throw;
  } catch (const Error& e) {
    lx.fail_previous(e.what());
  }
}

std::string token_name(const std::string& s) {
  std::string out;
  for (char c : s) out += std::isspace(static_cast<unsigned char>(c)) || c == '#' ? '_' : c;
  return out.empty() ? "unnamed" : out;
}

void put_row(std::ostringstream& os, const std::string& kw, const std::vector<int>& v, int width) {
  os << kw;
  if (width <= 0 || static_cast<int>(v.size()) <= width) {
    for (int x : v) os << ' ' << x;
    os << '\n';
    return;
  }
  os << '\n';
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << (i % width == 0 ? "  " : " ") << v[i];
    if (i % width == static_cast<std::size_t>(width) - 1) os << '\n';
  }
  if (v.size() % width != 0) os << '\n';
}

void put_ring(std::ostringstream& os, const FiniteRing& r) {
  os << "ring " << token_name(r.name()) << '\n';
  os << "order " << r.order() << '\n';
  put_row(os, "add", r.add_table(), r.order());
  put_row(os, "mul", r.mul_table(), r.order());
  os << "unit ";
  if (r.unit())
    os << *r.unit() << '\n';
  else
    os << "none\n";
}

void put_esystem(std::ostringstream& os, const ESystem& es) {
  os << "esystem " << token_name(es.name) << '\n';
  os << "B ";
  put_ring(os, *es.B);
  os << "D ";
  put_ring(os, *es.D);
  put_row(os, "d", es.d, 0);
  std::vector<int> left, right;
  for (const auto& t : es.theta) {
    left.insert(left.end(), t.left.begin(), t.left.end());
    right.insert(right.end(), t.right.begin(), t.right.end());
  }
  put_row(os, "theta_left", left, es.B->order());
  put_row(os, "theta_right", right, es.B->order());
}

}  // namespace

RingTables parse_ring_tables(const std::string& text, const std::string& file) {
  Lexer lx(text, file);
  RingTables t = ring_tables(lx);
  lx.finish();
  return t;
}

RingPtr parse_ring(const std::string& text, const std::string& file) {
  Lexer lx(text, file);
  RingTables t = ring_tables(lx);
  lx.finish();
  return make_ring(std::move(t));
}

Bimodule parse_module(const RingPtr& ring, const std::string& text, const std::string& file) {
  Lexer lx(text, file);
  lx.keyword("module");
  lx.word("a module name");
  lx.keyword("order");
  const int m = static_cast<int>(lx.integer("the order", 1, kMaxRingOrder));
  const int r = ring->order();
  auto add = lx.indices("add", static_cast<std::size_t>(m) * m, m);
  auto left = lx.indices("left", static_cast<std::size_t>(r) * m, m);
  auto rows = lx.indices("right", static_cast<std::size_t>(r) * m, m);
  lx.finish();
  std::vector<int> right(static_cast<std::size_t>(m) * r);
  for (int x = 0; x < r; ++x)
    for (int a = 0; a < m; ++a) right[a * r + x] = rows[x * m + a];
  TableGroup g = with_position(lx, [&] { return TableGroup(std::move(add), m); });
  return validate_bimodule(ring, std::move(g), std::move(left), std::move(right));
}

ESystem parse_esystem(const std::string& text, const std::string& file) {
  Lexer lx(text, file);
  ESystem es = esystem_block(lx);
  lx.finish();
  return es;
}

CrossedBimodule parse_crossed(const std::string& text, const std::string& file) {
  Lexer lx(text, file);
  lx.keyword("crossed");
  CrossedBimodule xb;
  xb.name = lx.word("a name");
  lx.keyword("D");
  xb.D = ring_field(lx);
  lx.keyword("group");
  xb.b_name = lx.word("a group name");
  lx.keyword("order");
  const int n = xb.b_order = static_cast<int>(lx.integer("the order", 1, kMaxRingOrder));
  const int nd = xb.D->order();
  xb.b_add = lx.indices("add", static_cast<std::size_t>(n) * n, n);
  xb.d = lx.indices("d", n, nd);
  xb.left = lx.indices("left", static_cast<std::size_t>(nd) * n, n);
  const auto rows = lx.indices("right", static_cast<std::size_t>(nd) * n, n);
  lx.finish();
  xb.right.assign(static_cast<std::size_t>(n) * nd, 0);
  for (int x = 0; x < nd; ++x)
    for (int b = 0; b < n; ++b) xb.right[b * nd + x] = rows[x * n + b];
  return validate_crossed_bimodule(std::move(xb));
}

Section parse_section(const ESystem& es, const std::string& text, const std::string& file) {
  const KernelModule km = induced_kernel_module(es);
  const int n = km.coker.ring->order();
  const int nb = es.B->order();
  Lexer lx(text, file);
  lx.keyword("section");
  Section sec;
  sec.sigma = lx.indices("sigma", n, es.D->order());
  sec.phi_plus = lx.indices("phi_plus", static_cast<std::size_t>(n) * n, nb);
  sec.phi_times = lx.indices("phi_times", static_cast<std::size_t>(n) * n, nb);
  lx.finish();
  validate_section(es, km, sec);
  return sec;
}

Extension parse_extension(const std::string& text, const std::string& file) {
  Lexer lx(text, file);
  lx.keyword("extension");
  lx.word("an extension name");
  lx.keyword("base");
  ESystem base = esystem_field(lx);
  lx.keyword("Q");
  RingPtr Q = ring_field(lx);
  lx.keyword("E");
  RingPtr E = ring_field(lx);
  auto j = lx.indices("j", base.B->order(), E->order());
  auto p = lx.indices("p", E->order(), Q->order());
  auto eps = lx.indices("eps", E->order(), base.D->order());
  lx.finish();
  return validate_extension(base, E, Q, std::move(j), std::move(p), std::move(eps));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RingPtr load_ring(const std::string& path) { return parse_ring(read_file(path), path); }
Bimodule load_module(const RingPtr& ring, const std::string& path) {
  return parse_module(ring, read_file(path), path);
}
ESystem load_esystem(const std::string& path) { return parse_esystem(read_file(path), path); }
CrossedBimodule load_crossed(const std::string& path) { return parse_crossed(read_file(path), path); }
Section load_section(const ESystem& es, const std::string& path) {
  return parse_section(es, read_file(path), path);
}
Extension load_extension(const std::string& path) { return parse_extension(read_file(path), path); }

std::string file_kind(const std::string& text, const std::string& file) {
  Lexer lx(text, file);
  const Token* t = lx.peek();
  if (!t) lx.fail("empty file");
  for (const char* k : {"ring", "module", "esystem", "crossed", "section", "extension"})
    if (t->text == k) return k;
  lx.fail("unknown file kind");
}

std::string write_ring(const FiniteRing& r) {
  std::ostringstream os;
  put_ring(os, r);
  return os.str();
}

std::string write_module(const Bimodule& m, const std::string& name) {
  std::ostringstream os;
  const int n = m.module.order(), r = m.ring->order();
  os << "module " << token_name(name) << '\n';
  os << "order " << n << '\n';
  put_row(os, "add", m.module.add_table(), n);
  put_row(os, "left", m.left, n);
  std::vector<int> rows(static_cast<std::size_t>(r) * n);
  for (int x = 0; x < r; ++x)
    for (int a = 0; a < n; ++a) rows[x * n + a] = m.act_right(a, x);
  put_row(os, "right", rows, n);
  return os.str();
}

std::string write_esystem(const ESystem& es) {
  std::ostringstream os;
  put_esystem(os, es);
  return os.str();
}

std::string write_crossed(const CrossedBimodule& xb) {
  std::ostringstream os;
  const int n = xb.b_order, nd = xb.D->order();
  os << "crossed " << token_name(xb.name) << '\n';
  os << "D ";
  put_ring(os, *xb.D);
  os << "group " << token_name(xb.b_name) << '\n';
  os << "order " << n << '\n';
  put_row(os, "add", xb.b_add, n);
  put_row(os, "d", xb.d, 0);
  put_row(os, "left", xb.left, n);
  std::vector<int> rows(static_cast<std::size_t>(nd) * n);
  for (int x = 0; x < nd; ++x)
    for (int b = 0; b < n; ++b) rows[x * n + b] = xb.act_right(b, x);
  put_row(os, "right", rows, n);
  return os.str();
}

std::string write_section(const Section& sec) {
  std::ostringstream os;
  const int n = static_cast<int>(sec.sigma.size());
  os << "section\n";
  put_row(os, "sigma", sec.sigma, 0);
  put_row(os, "phi_plus", sec.phi_plus, n);
  put_row(os, "phi_times", sec.phi_times, n);
  return os.str();
}

std::string write_extension(const Extension& ext, const std::string& name) {
  std::ostringstream os;
  os << "extension " << token_name(name) << '\n';
  os << "base ";
  put_esystem(os, ext.base);
  os << "Q ";
  put_ring(os, *ext.Q);
  os << "E ";
  put_ring(os, *ext.E);
  put_row(os, "j", ext.j, 0);
  put_row(os, "p", ext.p, 0);
  put_row(os, "eps", ext.eps, 0);
  return os.str();
}

std::vector<int> parse_map(const std::string& text, int source_order, int target_order) {
  if (text == "id") {
    if (source_order != target_order)
      throw Error("map 'id' needs equal orders, got " + std::to_string(source_order) + " and " +
                  std::to_string(target_order));
    std::vector<int> m(source_order);
    for (int i = 0; i < source_order; ++i) m[i] = i;
    return m;
  }
  std::vector<int> m(source_order, -1);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    int u = 0, x = 0;
    auto num = [&](const std::string& s, int& out) {
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      return ec == std::errc() && p == s.data() + s.size() && !s.empty();
    };
    if (colon == std::string::npos || !num(item.substr(0, colon), u) || !num(item.substr(colon + 1), x))
      throw Error("map entry '" + item + "' is not of the form u:x");
    if (u < 0 || u >= source_order) throw Error("map source " + std::to_string(u) + " out of range");
    if (x < 0 || x >= target_order) throw Error("map target " + std::to_string(x) + " out of range");
    if (m[u] != -1) throw Error("map source " + std::to_string(u) + " given twice");
    m[u] = x;
    pos = comma + 1;
  }
  for (int u = 0; u < source_order; ++u)
    if (m[u] == -1) throw Error("map misses source " + std::to_string(u));
  return m;
}

}  // namespace annring::io
