#include "inflect/render.hpp"

#include "inflect/inflection.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace inflect {

void Window::validate() const {
  if (!(x_min < x_max)) throw std::invalid_argument("window: x_min must be below x_max");
  if (!(l_min < l_max)) throw std::invalid_argument("window: lambda_min must be below lambda_max");
  if (nx < 2 || nl < 2) throw std::invalid_argument("window: resolution must be at least 2");
}

Rational Window::x_at(int i) const { return x_min + (x_max - x_min) * i / nx; }
Rational Window::l_at(int j) const { return l_min + (l_max - l_min) * j / nl; }

Window default_window() { return Window{}; }

namespace {

// Integer coefficients (constant first) of a row polynomial after clearing
// denominators; the sign pattern is unchanged.
std::vector<Integer> integer_coeffs(const SparsePoly& row) {
  const Integer l = denominator_lcm(row);
  std::vector<Integer> c(static_cast<std::size_t>(std::max(row.total_degree(), 0)) + 1);
  for (const auto& [e, v] : row.terms()) c[e.empty() ? 0 : e[0]] = Integer(v * l);
  return c;
}

// Signs of sum c_k x^k at x = x0 + i*h for i = 0..n, all sharing one
// denominator B: x = a_i / B and the sign of B^d p(x) is the sign of p(x).
void row_signs(const std::vector<Integer>& c, const Rational& x0, const Rational& h, int n,
               int* out) {
  const Integer B = lcm(x0.get_den(), h.get_den());
  const Integer a0 = x0.get_num() * (B / x0.get_den());
  const Integer da = h.get_num() * (B / h.get_den());
  const std::size_t d = c.size() - 1;
  std::vector<Integer> scaled(c.size());
  Integer bp(1);
  for (std::size_t k = d + 1; k-- > 0;) {
    scaled[k] = c[k] * bp;
    bp *= B;
  }
  Integer a = a0;
  Integer acc;
  for (int i = 0; i <= n; ++i, a += da) {
    acc = scaled[d];
    for (std::size_t k = d; k-- > 0;) acc = acc * a + scaled[k];
    out[i] = sgn(acc);
  }
}

}  // namespace

SignGrid sample_sign_grid(const SparsePoly& p, const Window& w) {
  w.validate();
  const SparsePoly q = reorder_vars(p, kXL);
  SignGrid g{w, std::vector<int>(static_cast<std::size_t>(w.nx + 1) * (w.nl + 1))};
  const Rational h = (w.x_max - w.x_min) / w.nx;
  for (int j = 0; j <= w.nl; ++j) {
    const SparsePoly row = specialize(q, kLambda, w.l_at(j));
    row_signs(integer_coeffs(row), w.x_min, h, w.nx,
              &g.values[static_cast<std::size_t>(j) * (w.nx + 1)]);
  }
  return g;
}

namespace {

bool positive_side(int s) { return s >= 0; }

}  // namespace

std::vector<ContourSegment> contour_segments(const SignGrid& g) {
  const Window& w = g.window;
  std::vector<ContourSegment> out;
  const Rational hx = (w.x_max - w.x_min) / w.nx;
  const Rational hl = (w.l_max - w.l_min) / w.nl;
  for (int j = 0; j < w.nl; ++j) {
    const Rational l0 = w.l_at(j);
    for (int i = 0; i < w.nx; ++i) {
      // corners counter-clockwise from the lower left
      const std::array<int, 4> s = {g.at(i, j), g.at(i + 1, j), g.at(i + 1, j + 1), g.at(i, j + 1)};
      unsigned mask = 0;
      for (int c = 0; c < 4; ++c) mask |= positive_side(s[c]) ? (1u << c) : 0u;
      if (mask == 0 || mask == 15) continue;

      const Rational x0 = w.x_min + hx * i;
      const std::array<PlanePoint, 4> corner = {PlanePoint{x0, l0}, PlanePoint{x0 + hx, l0},
                                                PlanePoint{x0 + hx, l0 + hl},
                                                PlanePoint{x0, l0 + hl}};
      // edge e joins corners e and e+1 (mod 4)
      auto crossing = [&](int e) {
        const int a = e, b = (e + 1) % 4;
        if (s[a] == 0) return corner[a];
        if (s[b] == 0) return corner[b];
        return PlanePoint{(corner[a].x + corner[b].x) / 2, (corner[a].lambda + corner[b].lambda) / 2};
      };
      auto crossed = [&](int e) { return ((mask >> e) & 1u) != ((mask >> ((e + 1) % 4)) & 1u); };

      std::vector<std::pair<int, int>> pairs;
      if (mask == 0b0101) {
        pairs = {{3, 0}, {1, 2}};
      } else if (mask == 0b1010) {
        pairs = {{0, 1}, {2, 3}};
      } else {
        int first = -1, second = -1;
        for (int e = 0; e < 4; ++e) {
          if (!crossed(e)) continue;
          (first < 0 ? first : second) = e;
        }
        pairs = {{first, second}};
      }
      for (const auto& [ea, eb] : pairs) {
        ContourSegment seg{crossing(ea), crossing(eb)};
        if (seg.a == seg.b) continue;
        out.push_back(std::move(seg));
      }
    }
  }
  return out;
}

int row_sign_changes(const SignGrid& g, int j) {
  if (j < 0 || j > g.window.nl) throw std::out_of_range("row index outside the grid");
  int n = 0;
  for (int i = 0; i < g.window.nx; ++i) {
    if (positive_side(g.at(i, j)) != positive_side(g.at(i + 1, j))) ++n;
  }
  return n;
}

std::string polynomial_hash(const SparsePoly& p) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : to_json(p)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

constexpr double kCanvas = 640.0;
constexpr double kMargin = 40.0;
constexpr double kPlot = kCanvas - 2 * kMargin;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Frame {
  double x0, xs, l1, ls;
  explicit Frame(const Window& w)
      : x0(w.x_min.get_d()),
        xs(kPlot / Rational(w.x_max - w.x_min).get_d()),
        l1(w.l_max.get_d()),
        ls(kPlot / Rational(w.l_max - w.l_min).get_d()) {}
  double px(const Rational& x) const { return kMargin + (x.get_d() - x0) * xs; }
  double py(const Rational& l) const { return kMargin + (l1 - l.get_d()) * ls; }
};

std::string xml_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    switch (c) {
      case '&': o += "&amp;"; break;
      case '<': o += "&lt;"; break;
      case '>': o += "&gt;"; break;
      case '"': o += "&quot;"; break;
      default: o += c;
    }
  }
  return o;
}

// Comments may not contain "--".
std::string comment_safe(std::string s) {
  for (std::size_t k = s.find("--"); k != std::string::npos; k = s.find("--")) s[k + 1] = '_';
  return s;
}

}  // namespace

void write_svg(const std::vector<ContourSegment>& segments, const SignGrid* shade, const Window& w,
               std::ostream& out, const SvgMetadata& meta) {
  w.validate();
  if (shade && !(shade->window == w)) throw std::invalid_argument("shade grid window differs");
  const Frame fr(w);
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas
    << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n";
  s << "<!--\n"
    << comment_safe("polynomial-hash: fnv1a64:" +
                    (meta.polynomial_hash.empty() ? std::string("none") : meta.polynomial_hash))
    << "\n"
    << comment_safe("window: x in [" + to_string(w.x_min) + ", " + to_string(w.x_max) +
                    "], lambda in [" + to_string(w.l_min) + ", " + to_string(w.l_max) + "]")
    << "\n"
    << "resolution: " << w.nx << " x " << w.nl << " cells\n"
    << "tie-rule: grid nodes where the polynomial is exactly zero count as positive\n"
    << "shading: cells whose four corners have f > 0, f = x(x-1)(x-lambda)\n"
    << "-->\n";
  if (!meta.title.empty()) s << "<title>" << xml_escape(meta.title) << "</title>\n";
  s << "<rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\"" << kCanvas
    << "\" fill=\"white\"/>\n";

  if (shade) {
    const double cw = kPlot / w.nx;
    const double ch = kPlot / w.nl;
    s << "<g fill=\"#d0d0d0\" stroke=\"none\">\n";
    for (int j = 0; j < w.nl; ++j) {
      for (int i = 0; i < w.nx;) {
        auto full = [&](int c) {
          return shade->at(c, j) > 0 && shade->at(c + 1, j) > 0 && shade->at(c, j + 1) > 0 &&
                 shade->at(c + 1, j + 1) > 0;
        };
        if (!full(i)) {
          ++i;
          continue;
        }
        int e = i;
        while (e < w.nx && full(e)) ++e;
        s << "<rect x=\"" << fmt(kMargin + i * cw) << "\" y=\"" << fmt(kMargin + (w.nl - j - 1) * ch)
          << "\" width=\"" << fmt((e - i) * cw) << "\" height=\"" << fmt(ch) << "\"/>\n";
        i = e;
      }
    }
    s << "</g>\n";
  }

  // frame and axes
  s << "<rect x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kMargin) << "\" width=\"" << fmt(kPlot)
    << "\" height=\"" << fmt(kPlot) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  s << "<g stroke=\"#606060\" stroke-width=\"0.75\">\n";
  if (w.x_min <= 0 && 0 <= w.x_max) {
    s << "<line x1=\"" << fmt(fr.px(0)) << "\" y1=\"" << fmt(kMargin) << "\" x2=\"" << fmt(fr.px(0))
      << "\" y2=\"" << fmt(kMargin + kPlot) << "\"/>\n";
  }
  if (w.l_min <= 0 && 0 <= w.l_max) {
    s << "<line x1=\"" << fmt(kMargin) << "\" y1=\"" << fmt(fr.py(0)) << "\" x2=\""
      << fmt(kMargin + kPlot) << "\" y2=\"" << fmt(fr.py(0)) << "\"/>\n";
  }
  s << "</g>\n";
  s << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  s << "<text x=\"" << fmt(kMargin + kPlot + 8) << "\" y=\"" << fmt(kMargin + kPlot + 4) << "\">x</text>\n";
  s << "<text x=\"" << fmt(kMargin - 4) << "\" y=\"" << fmt(kMargin - 10) << "\">λ</text>\n";
  s << "<text x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kMargin + kPlot + 16)
    << "\" text-anchor=\"middle\">" << to_string(w.x_min) << "</text>\n";
  s << "<text x=\"" << fmt(kMargin + kPlot) << "\" y=\"" << fmt(kMargin + kPlot + 16)
    << "\" text-anchor=\"middle\">" << to_string(w.x_max) << "</text>\n";
  s << "<text x=\"" << fmt(kMargin - 6) << "\" y=\"" << fmt(kMargin + kPlot + 4)
    << "\" text-anchor=\"end\">" << to_string(w.l_min) << "</text>\n";
  s << "<text x=\"" << fmt(kMargin - 6) << "\" y=\"" << fmt(kMargin + 4) << "\" text-anchor=\"end\">"
    << to_string(w.l_max) << "</text>\n";
  s << "</g>\n";

  if (!segments.empty()) {
    s << "<path fill=\"none\" stroke=\"black\" stroke-width=\"1.25\" stroke-linecap=\"round\" d=\"";
    bool first = true;
    for (const auto& seg : segments) {
      if (!first) s << ' ';
      first = false;
      s << 'M' << fmt(fr.px(seg.a.x)) << ',' << fmt(fr.py(seg.a.lambda)) << 'L' << fmt(fr.px(seg.b.x))
        << ',' << fmt(fr.py(seg.b.lambda));
    }
    s << "\"/>\n";
  }

  s << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (const auto& [mx, ml, label] :
       {std::tuple<int, int, const char*>{0, 0, "(0,0)"}, {1, 1, "(1,1)"}}) {
    const Rational rx(mx), rl(ml);
    if (rx < w.x_min || rx > w.x_max || rl < w.l_min || rl > w.l_max) continue;
    s << "<circle cx=\"" << fmt(fr.px(rx)) << "\" cy=\"" << fmt(fr.py(rl))
      << "\" r=\"3\" fill=\"white\" stroke=\"#b00000\" stroke-width=\"1.5\"/>\n";
    s << "<text x=\"" << fmt(fr.px(rx) + 5) << "\" y=\"" << fmt(fr.py(rl) - 5) << "\" fill=\"#b00000\">"
      << label << "</text>\n";
  }
  s << "</g>\n";
  s << "</svg>\n";

  out << s.str();
  out.flush();
  if (!out) throw std::runtime_error("failed to write SVG output");
}

void render_curve(const SparsePoly& p, const Window& w, std::ostream& out, const std::string& title) {
  const SignGrid curve = sample_sign_grid(p, w);
  const SignGrid f = sample_sign_grid(legendre_f(), w);
  write_svg(contour_segments(curve), &f, w, out, SvgMetadata{title, polynomial_hash(p)});
}

}  // namespace inflect
