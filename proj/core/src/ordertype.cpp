#include "gorder/ordertype.hpp"

#include <sstream>

#include "gorder/errors.hpp"

namespace gorder {

std::string Triple::to_string() const {
  return std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(k);
}

Chirotope::Chirotope(int n, std::vector<Sign> ascending_signs)
    : n_(n), signs_(std::move(ascending_signs)) {
  const int expect = n * (n - 1) * (n - 2) / 6;
  if (static_cast<int>(signs_.size()) != expect) {
    throw size_mismatch("chirotope over " + std::to_string(n) + " elements needs " +
                        std::to_string(expect) + " signs, got " +
                        std::to_string(signs_.size()));
  }
}

int Chirotope::rank(int i, int j, int k) const {
  // lexicographic rank of the ascending triple, 1-based indices
  auto c2 = [](long m) { return m * (m - 1) / 2; };
  auto c3 = [](long m) { return m * (m - 1) * (m - 2) / 6; };
  const long before_i = c3(n_) - c3(n_ - (i - 1));
  const long before_j = c2(n_ - i) - c2(n_ - (j - 1));
  return static_cast<int>(before_i + before_j + (k - j - 1));
}

Sign Chirotope::ascending(int i, int j, int k) const {
  if (!(1 <= i && i < j && j < k && k <= n_)) {
    throw validation_error("not an ascending triple in range");
  }
  return signs_[rank(i, j, k)];
}

Sign Chirotope::oriented(int a, int b, int c) const {
  int v[3] = {a, b, c};
  int parity = 1;
  // sort the triple, tracking swap parity
  for (int pass = 0; pass < 2; ++pass) {
    for (int t = 0; t + 1 < 3 - pass; ++t) {
      if (v[t] > v[t + 1]) {
        std::swap(v[t], v[t + 1]);
        parity = -parity;
      }
    }
  }
  if (v[0] == v[1] || v[1] == v[2]) {
    throw validation_error("oriented triple with repeated index");
  }
  const Sign s = ascending(v[0], v[1], v[2]);
  return parity == 1 ? s : negate(s);
}

std::vector<Triple> Chirotope::ascending_triples() const {
  std::vector<Triple> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      for (int k = j + 1; k <= n_; ++k) out.push_back({i, j, k});
  return out;
}

std::vector<Triple> Chirotope::ccw_triples() const {
  std::vector<Triple> out;
  for (const Triple& t : ascending_triples()) {
    if (ascending(t) == Sign::CCW) out.push_back(t);
  }
  return out;
}

Chirotope euclidean_chirotope(const PointList& points) {
  const int n = static_cast<int>(points.size());
  std::vector<Sign> signs;
  signs.reserve(n * (n - 1) * (n - 2) / 6);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) signs.push_back(orient2d(points[i], points[j], points[k]));
  return Chirotope(n, std::move(signs));
}

Chirotope non_pappus_chirotope() {
  static const int ccw[20][3] = {
      {2, 7, 8}, {2, 7, 9}, {3, 4, 5}, {3, 4, 8}, {3, 6, 8},
      {3, 7, 8}, {3, 7, 9}, {4, 6, 7}, {4, 6, 8}, {4, 6, 9},
      {4, 7, 8}, {4, 7, 9}, {5, 6, 7}, {5, 6, 8}, {5, 6, 9},
      {5, 7, 8}, {5, 7, 9}, {5, 8, 9}, {6, 7, 8}, {6, 7, 9},
  };
  const int n = 9;
  std::vector<Sign> signs(n * (n - 1) * (n - 2) / 6, Sign::CW);
  int idx = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        for (const auto& t : ccw) {
          if (t[0] == i && t[1] == j && t[2] == k) signs[idx] = Sign::CCW;
        }
        ++idx;
      }
    }
  }
  return Chirotope(n, std::move(signs));
}

std::vector<Triple> chirotope_diff(const Chirotope& a, const Chirotope& b) {
  if (a.n() != b.n()) {
    throw size_mismatch("chirotopes over " + std::to_string(a.n()) + " and " +
                        std::to_string(b.n()) + " elements");
  }
  std::vector<Triple> out;
  for (const Triple& t : a.ascending_triples()) {
    if (a.ascending(t) != b.ascending(t)) out.push_back(t);
  }
  return out;
}

bool AxiomReport::all_pass() const {
  for (const auto& v : violations) {
    if (!v.empty()) return false;
  }
  return true;
}

AxiomReport check_cc_axioms(const Chirotope& chi) {
  AxiomReport report;
  const int n = chi.n();

  auto distinct3 = [](int a, int b, int c) { return a != b && a != c && b != c; };

  // Axioms 1-3 hold by the parity representation; verified anyway.
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      for (int w = 1; w <= n; ++w) {
        if (!distinct3(u, v, w)) continue;
        const bool uvw = chi.cc(u, v, w);
        if (uvw && !chi.cc(v, w, u)) report.violations[0].push_back({u, v, w});
        if (uvw && chi.cc(u, w, v)) report.violations[1].push_back({u, v, w});
        if (!uvw && !chi.cc(u, w, v)) report.violations[2].push_back({u, v, w});
      }
    }
  }

  // Axiom 4 (interiority): cc(x,u,v) && cc(x,v,w) && cc(x,w,u) => cc(u,v,w)
  for (int x = 1; x <= n; ++x) {
    for (int u = 1; u <= n; ++u) {
      for (int v = 1; v <= n; ++v) {
        for (int w = 1; w <= n; ++w) {
          if (x == u || x == v || x == w || !distinct3(u, v, w)) continue;
          if (chi.cc(x, u, v) && chi.cc(x, v, w) && chi.cc(x, w, u) && !chi.cc(u, v, w)) {
            report.violations[3].push_back({x, u, v, w});
          }
        }
      }
    }
  }

  // Axiom 5 (transitivity):
  // cc(a,b,u) && cc(a,b,v) && cc(a,b,w) && cc(a,u,v) && cc(a,v,w) => cc(a,u,w)
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      for (int u = 1; u <= n; ++u) {
        for (int v = 1; v <= n; ++v) {
          for (int w = 1; w <= n; ++w) {
            if (!distinct3(u, v, w) || u == a || u == b || v == a || v == b || w == a || w == b)
              continue;
            if (chi.cc(a, b, u) && chi.cc(a, b, v) && chi.cc(a, b, w) && chi.cc(a, u, v) &&
                chi.cc(a, v, w) && !chi.cc(a, u, w)) {
              report.violations[4].push_back({a, b, u, v, w});
            }
          }
        }
      }
    }
  }
  return report;
}

std::string chirotope_to_text(const Chirotope& chi) {
  std::ostringstream out;
  out << "n=" << chi.n() << "\n";
  for (const Triple& t : chi.ccw_triples()) out << t.i << " " << t.j << " " << t.k << "\n";
  return out.str();
}

Chirotope chirotope_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header) || header.rfind("n=", 0) != 0) {
    throw parse_error("chirotope text must start with 'n=<count>'");
  }
  int n = 0;
  try {
    n = std::stoi(header.substr(2));
  } catch (...) {
    throw parse_error("bad chirotope header '" + header + "'");
  }
  if (n < 3) throw parse_error("chirotope needs n >= 3");
  std::vector<Sign> signs(n * (n - 1) * (n - 2) / 6, Sign::CW);
  Chirotope skeleton(n, signs);

  std::vector<Triple> ccw;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    Triple t{};
    if (!(ls >> t.i >> t.j >> t.k)) throw parse_error("bad triple line '" + line + "'");
    if (!(1 <= t.i && t.i < t.j && t.j < t.k && t.k <= n)) {
      throw parse_error("triple out of range or not ascending: '" + line + "'");
    }
    ccw.push_back(t);
  }
  int idx = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        for (const Triple& t : ccw) {
          if (t.i == i && t.j == j && t.k == k) signs[idx] = Sign::CCW;
        }
        ++idx;
      }
    }
  }
  return Chirotope(n, std::move(signs));
}

}  // namespace gorder
