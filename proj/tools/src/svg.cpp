#include "disclosure/app/svg.hpp"

#include <cstdio>
#include <sstream>

#include "disclosure/app/cli.hpp"
#include "disclosure/uniform2.hpp"

namespace disclosure::app {

namespace {

constexpr double kSize = 1000.0;

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string fill_of(uniform2::RegionKind k) {
  switch (k) {
    case uniform2::RegionKind::AWins: return "#3b6fd6";
    case uniform2::RegionKind::BWins: return "#3fa34d";
    case uniform2::RegionKind::NoSale: return "#ffffff";
  }
  return "#000000";
}

void dashed(std::ostringstream& os, double x1, double y1, double x2, double y2) {
  os << "  <line x1=\"" << coord(x1) << "\" y1=\"" << coord(y1) << "\" x2=\"" << coord(x2)
     << "\" y2=\"" << coord(y2)
     << "\" stroke=\"#d62728\" stroke-width=\"2\" stroke-dasharray=\"12,8\"/>\n";
}

}  // namespace

std::string allocation_svg(const IntervalPartition& pa, const IntervalPartition& pb) {
  const auto regions = uniform2::allocation_regions(pa, pb);
  Rational area_a, area_b, area_none;
  for (const auto& r : regions) {
    const Rational s = geom::area(r.polygon);
    switch (r.kind) {
      case uniform2::RegionKind::AWins: area_a += s; break;
      case uniform2::RegionKind::BWins: area_b += s; break;
      case uniform2::RegionKind::NoSale: area_none += s; break;
    }
  }
  if (area_a + area_b + area_none != Rational(1)) {
    throw AssertionFailure("allocation regions cover " + (area_a + area_b + area_none).str() +
                           " of the unit square");
  }

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
        "viewBox=\"0 0 1000 1000\">\n";
  os << "  <title>A: " << pa.str() << "  B: " << pb.str() << "</title>\n";
  os << "  <desc>area A wins " << area_a.str() << ", B wins " << area_b.str() << ", no sale "
     << area_none.str() << "</desc>\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n";
  for (const auto& r : regions) {
    if (r.kind == uniform2::RegionKind::NoSale) continue;
    os << "  <polygon fill=\"" << fill_of(r.kind) << "\" stroke=\"" << fill_of(r.kind)
       << "\" stroke-width=\"0.5\" points=\"";
    for (std::size_t i = 0; i < r.polygon.size(); ++i) {
      if (i > 0) os << ' ';
      os << coord(r.polygon[i].x.to_double() * kSize) << ','
         << coord(kSize - r.polygon[i].y.to_double() * kSize);
    }
    os << "\"/>\n";
  }
  if (!pa.is_fully_disclosing()) {
    for (std::size_t k = 1; k < pa.interval_count(); ++k) {
      const double x = pa.lower(k).to_double() * kSize;
      dashed(os, x, 0, x, kSize);
    }
    for (const auto& t : pa.atoms()) dashed(os, t.to_double() * kSize, 0, t.to_double() * kSize, kSize);
  }
  if (!pb.is_fully_disclosing()) {
    for (std::size_t k = 1; k < pb.interval_count(); ++k) {
      const double y = kSize - pb.lower(k).to_double() * kSize;
      dashed(os, 0, y, kSize, y);
    }
    for (const auto& t : pb.atoms()) {
      const double y = kSize - t.to_double() * kSize;
      dashed(os, 0, y, kSize, y);
    }
  }
  os << "  <rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"none\" stroke=\"#000000\" "
        "stroke-width=\"2\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace disclosure::app
