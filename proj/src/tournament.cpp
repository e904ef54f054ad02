#include "tourney/tournament.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tourney {

Tournament::Tournament(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1) throw MalformedInputError("tournament needs at least one vertex");
  rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
  // transitive default: i beats every j > i
  for (int i = 0; i < n_; ++i) {
    std::uint64_t* row = rows_.data() + static_cast<std::size_t>(i) * words_;
    for (int j = i + 1; j < n_; ++j) row[j / 64] |= std::uint64_t{1} << (j % 64);
  }
}

void Tournament::set_arc(int from, int to) {
  if (from == to || from < 0 || to < 0 || from >= n_ || to >= n_)
    throw MalformedInputError("set_arc: bad vertex pair");
  auto* f = rows_.data() + static_cast<std::size_t>(from) * words_;
  auto* t = rows_.data() + static_cast<std::size_t>(to) * words_;
  f[to / 64] |= std::uint64_t{1} << (to % 64);
  t[from / 64] &= ~(std::uint64_t{1} << (from % 64));
}

int Tournament::out_degree(int v) const { return popcount_words(out_row(v)); }

Tournament Tournament::from_bits(int n, std::string_view bits) {
  if (n < 1) throw MalformedInputError("from_bits: n must be >= 1");
  std::size_t expect = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (bits.size() != expect)
    throw MalformedInputError("from_bits: bitstring length " +
                              std::to_string(bits.size()) + ", expected " +
                              std::to_string(expect) + " for n=" + std::to_string(n));
  Tournament t(n);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k) {
      char c = bits[k];
      if (c == '1') t.set_arc(i, j);
      else if (c == '0') t.set_arc(j, i);
      else throw MalformedInputError("from_bits: bad character at position " +
                                     std::to_string(k));
    }
  return t;
}

std::string Tournament::to_bits() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) s.push_back(arc(i, j) ? '1' : '0');
  return s;
}

Tournament Tournament::reversed() const {
  Tournament r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      if (arc(i, j)) r.set_arc(j, i);
      else r.set_arc(i, j);
    }
  return r;
}

Tournament Tournament::induced(std::span<const int> verts) const {
  if (verts.empty()) throw MalformedInputError("induced: empty vertex set");
  for (std::size_t a = 0; a < verts.size(); ++a) {
    if (verts[a] < 0 || verts[a] >= n_)
      throw MalformedInputError("induced: vertex out of range");
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      if (verts[a] == verts[b])
        throw MalformedInputError("induced: repeated vertex");
  }
  Tournament t(static_cast<int>(verts.size()));
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      if (arc(verts[a], verts[b])) t.set_arc(static_cast<int>(a), static_cast<int>(b));
      else t.set_arc(static_cast<int>(b), static_cast<int>(a));
    }
  return t;
}

Tournament Tournament::without_vertex(int v) const {
  if (v < 0 || v >= n_) throw MalformedInputError("without_vertex: bad vertex");
  if (n_ == 1) throw MalformedInputError("without_vertex: would leave no vertices");
  std::vector<int> keep;
  keep.reserve(n_ - 1);
  for (int u = 0; u < n_; ++u)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

Tournament Tournament::with_duplicated(int v, bool arc_to_copy) const {
  if (v < 0 || v >= n_) throw MalformedInputError("with_duplicated: bad vertex");
  Tournament t(n_ + 1);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      if (arc(i, j)) t.set_arc(i, j);
      else t.set_arc(j, i);
    }
  int twin = n_;
  for (int u = 0; u < n_; ++u) {
    if (u == v) continue;
    if (arc(v, u)) t.set_arc(twin, u);
    else t.set_arc(u, twin);
  }
  if (arc_to_copy) t.set_arc(v, twin);
  else t.set_arc(twin, v);
  return t;
}

Tournament Tournament::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw MalformedInputError("relabeled: permutation size mismatch");
  return induced(perm);  // induced already validates range/duplicates
}

std::vector<Tournament> parse_tour(std::istream& in, const std::string& source_name) {
  std::vector<Tournament> out;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw MalformedInputError(source_name + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag != "t") fail("expected 't', got '" + tag + "'");
    long long n = -1;
    if (!(ls >> n) || n < 1) fail("bad vertex count");
    if (n > 100000) fail("vertex count too large");
    std::string bits;
    ls >> bits;
    std::string rest;
    if (ls >> rest) fail("trailing content");
    try {
      out.push_back(Tournament::from_bits(static_cast<int>(n), bits));
    } catch (const MalformedInputError& e) {
      fail(e.what());
    }
  }
  return out;
}

std::vector<Tournament> read_tour_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInputError("cannot open " + path);
  return parse_tour(in, path);
}

void write_tour(std::ostream& out, std::span<const Tournament> ts) {
  out << "# tour/1\n";
  for (const Tournament& t : ts) {
    out << "t " << t.size();
    if (t.size() > 1) out << ' ' << t.to_bits();
    out << '\n';
  }
}

void write_tour_file(const std::string& path, std::span<const Tournament> ts) {
  std::ofstream out(path);
  if (!out) throw MalformedInputError("cannot write " + path);
  write_tour(out, ts);
}

}  // namespace tourney
