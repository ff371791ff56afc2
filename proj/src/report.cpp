#include "tamecoh/report.hpp"

#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tamecoh/error.hpp"
#include "tamecoh/groups.hpp"

namespace tamecoh {

namespace {

using nlohmann::ordered_json;

template <typename T>
ordered_json nullable(const std::optional<T>& value) {
  return value ? ordered_json(*value) : ordered_json(nullptr);
}

std::string join(const std::vector<Nat>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

Nat ClassifyReport::galoisian_count() const {
  Nat count = 0;
  for (const auto& o : orbits) count += o.galoisian ? 1 : 0;
  return count;
}

std::string group_name(const MetacyclicPresentation& pres) {
  if (pres.order() <= kEnumerationBound) return structure_report(pres).name;
  const Nat m = pres.m();
  if (pres.a() % m != 1 % m) return "metacyclic-generic";
  const Nat d1 = gcd(gcd(m, pres.n()), pres.s());
  if (d1 == 1) return "cyclic";
  return "abelian(" + std::to_string(d1) + "|" + std::to_string(pres.order() / d1) + ")";
}

ClassifyReport classify(const TameShape& shape) {
  ClassifyReport report{shape.q(), shape.e(), shape.f(), shape.g(), shape.g_f(), false, {}};
  report.abelian = (shape.q() - 1) % shape.e() == 0;
  for (const auto& cls : orbits(shape)) {
    const LineParam line = cls.line();
    OrbitSummary o;
    o.rep = cls.rep();
    o.members = cls.orbit;
    o.stable = is_stable(line);
    o.galoisian = is_galoisian(cls);
    o.closure_degree = closure_degree(line);
    if (o.galoisian) {
      const auto pres = galois_group(cls);
      o.group = group_name(pres);
      o.s = pres.s();
      o.class_order = class_order(class_via_quotient(line));
      o.split_degree = split_degree(line);
    }
    report.orbits.push_back(std::move(o));
  }
  return report;
}

std::string to_json(const ClassifyReport& report) {
  ordered_json doc;
  doc["q"] = report.q;
  doc["e"] = report.e;
  doc["f"] = report.f;
  doc["g"] = report.g;
  doc["g_f"] = report.g_f;
  doc["line_count"] = report.g_f;
  doc["orbit_count"] = report.orbits.size();
  doc["galoisian_count"] = report.galoisian_count();
  doc["abelian"] = report.abelian;
  doc["orbits"] = ordered_json::array();
  for (const auto& o : report.orbits) {
    ordered_json entry;
    entry["rep"] = o.rep;
    entry["size"] = o.members.size();
    entry["members"] = o.members;
    entry["stable"] = o.stable;
    entry["galoisian"] = o.galoisian;
    entry["group"] = nullable(o.group);
    entry["s"] = nullable(o.s);
    entry["closure_degree"] = o.closure_degree;
    entry["split_degree"] = nullable(o.split_degree);
    entry["class_order"] = nullable(o.class_order);
    doc["orbits"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string to_text(const ClassifyReport& report) {
  std::ostringstream out;
  out << "q=" << report.q << " e=" << report.e << " f=" << report.f << "  g=" << report.g
      << " g_f=" << report.g_f << "\n";
  out << report.g_f << " lines, " << report.orbits.size() << " classes, "
      << report.galoisian_count() << " galoisian" << (report.abelian ? ", all abelian" : "")
      << "\n";
  for (const auto& o : report.orbits) {
    out << "  orbit {" << join(o.members, ",") << "}  closure_degree=" << o.closure_degree;
    if (o.galoisian) {
      out << "  galoisian " << *o.group << " s=" << *o.s << " class_order=" << *o.class_order
          << " split_degree=" << *o.split_degree;
    }
    out << "\n";
  }
  return out.str();
}

std::string to_json(const MassReport& report, const std::optional<Rational>& wild_axiom) {
  ordered_json doc;
  doc["q"] = report.field.q();
  doc["p"] = report.field.p();
  doc["e"] = report.degree;
  doc["class_count"] = report.class_count;
  doc["aut_order"] = report.aut_order;
  doc["subfields_per_class"] = report.subfields_per_class;
  doc["subfield_count_sum"] = to_fraction_string(report.subfield_count_sum);
  doc["per_class_weighted_sum"] = to_fraction_string(report.per_class_weighted_sum);
  if (wild_axiom) {
    doc["wild_mass_axiom"] = to_fraction_string(*wild_axiom);
    doc["wild_degree"] = report.degree * report.field.p();
    doc["wild_reduction"] =
        to_fraction_string(tame_wild_reduction(report.field, report.degree, *wild_axiom));
  }
  return doc.dump(2) + "\n";
}

std::string to_text(const MassReport& report, const std::optional<Rational>& wild_axiom) {
  std::ostringstream out;
  out << "q=" << report.field.q() << " e=" << report.degree << "\n"
      << "  classes: " << report.class_count << ", |Aut| = " << report.aut_order
      << ", subfields per class: " << report.subfields_per_class << "\n"
      << "  subfield count sum: " << to_fraction_string(report.subfield_count_sum) << "\n"
      << "  per-class weighted sum: " << to_fraction_string(report.per_class_weighted_sum)
      << "\n";
  if (wild_axiom) {
    out << "  degree " << report.degree * report.field.p() << " mass with inner sum "
        << to_fraction_string(*wild_axiom) << ": "
        << to_fraction_string(tame_wild_reduction(report.field, report.degree, *wild_axiom))
        << "\n";
  }
  return out.str();
}

std::string to_json(const L3Report& report) {
  ordered_json doc;
  doc["q"] = report.q.q;
  doc["p"] = report.q.p;
  doc["l"] = report.l;
  doc["v_l_q_minus_1"] = report.v_l_q_minus_1;
  doc["feasible"] = report.feasible;
  if (report.shape) {
    doc["e"] = report.shape->first;
    doc["f"] = report.shape->second;
  } else {
    doc["e"] = nullptr;
    doc["f"] = nullptr;
  }
  doc["line_count"] = report.line_count;
  doc["orbit_count"] = report.orbit_count;
  doc["extensions"] = ordered_json::array();
  for (const auto& ext : report.extensions) {
    doc["extensions"].push_back(ordered_json{{"x", ext.x},
                                             {"group", ext.group},
                                             {"s", ext.s},
                                             {"order", ext.order},
                                             {"exponent", ext.exponent},
                                             {"involution_count", ext.involution_count},
                                             {"class_order", ext.class_order},
                                             {"split_degree", ext.split_degree}});
  }
  doc["closures"] = ordered_json::array();
  for (const auto& note : report.closures) {
    doc["closures"].push_back(ordered_json{{"orbit", note.orbit},
                                           {"closure_degree", note.closure_degree},
                                           {"closure_level", note.closure_level},
                                           {"closure_line", note.closure_line},
                                           {"closure_class_order", note.closure_class_order},
                                           {"split_level", note.split_level}});
  }
  if (!report.abelian_shapes.empty()) {
    doc["abelian_shapes"] = ordered_json::array();
    for (const auto& s : report.abelian_shapes) {
      doc["abelian_shapes"].push_back(ordered_json{{"e", s.e},
                                                   {"f", s.f},
                                                   {"orbit_count", s.orbit_count},
                                                   {"galoisian_count", s.galoisian_count},
                                                   {"abelian_count", s.abelian_count}});
    }
  }
  return doc.dump(2) + "\n";
}

std::string to_text(const L3Report& report) {
  std::ostringstream out;
  out << "q=" << report.q.q << " l=" << report.l << "  v_l(q-1)=" << report.v_l_q_minus_1
      << "\n";
  if (!report.feasible) {
    out << "  no nonabelian galoisian extension of degree l^3\n";
  } else {
    out << "  shape (e,f)=(" << report.shape->first << "," << report.shape->second << "): "
        << report.line_count << " lines, " << report.orbit_count << " classes, "
        << report.extensions.size() << " galoisian\n";
    for (const auto& ext : report.extensions) {
      out << "  x=" << ext.x << "  " << ext.group << "  order=" << ext.order
          << " exponent=" << ext.exponent << " s=" << ext.s
          << " split_degree=" << ext.split_degree << "\n";
    }
    for (const auto& note : report.closures) {
      out << "  orbit {" << join(note.orbit, ",") << "} becomes galoisian at f="
          << note.closure_level << " (line " << note.closure_line << ", class order "
          << note.closure_class_order << "), splits at f=" << note.split_level << "\n";
    }
  }
  for (const auto& s : report.abelian_shapes) {
    out << "  shape (" << s.e << "," << s.f << "): " << s.orbit_count << " classes, "
        << s.galoisian_count << " galoisian, " << s.abelian_count << " abelian\n";
  }
  return out.str();
}

namespace {

struct ClassListing {
  Nat rep;
  Nat order;
  Nat splitting;
};

constexpr Nat kClassListingLimit = 4096;

// Canonical representatives are the multiples of m / gcd(m, a - 1) below
// gcd(S, m); empty when there are more than kClassListingLimit classes.
std::vector<ClassListing> list_classes(const CyclicAction& action) {
  std::vector<ClassListing> out;
  if (h2_order(action) > kClassListingLimit) return out;
  const Nat h = norm_image_generator(action);
  const Nat m = action.m();
  const Nat kernel_step = m / gcd(m, (action.a() + m - 1) % m);
  for (Nat x = 0; x < h; x += kernel_step) {
    const H2Class c = make_class(action, x);
    out.push_back({c.rep, class_order(c), splitting_multiplier(c)});
  }
  return out;
}

std::optional<Nat> bruteforce_if_feasible(const CyclicAction& action) {
  try {
    return h2_order_bruteforce(action);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

}  // namespace

std::string cohomology_json(const CyclicAction& action) {
  ordered_json doc;
  doc["m"] = action.m();
  doc["n"] = action.n();
  doc["a"] = action.a();
  doc["norm_sum"] = norm_sum(action);
  doc["h1_order"] = h1_order(action);
  doc["h2_order"] = h2_order(action);
  doc["h2_order_bruteforce"] = nullable(bruteforce_if_feasible(action));
  doc["classes"] = ordered_json::array();
  for (const auto& c : list_classes(action)) {
    doc["classes"].push_back(
        ordered_json{{"rep", c.rep}, {"order", c.order}, {"splitting_multiplier", c.splitting}});
  }
  return doc.dump(2) + "\n";
}

std::string cohomology_text(const CyclicAction& action) {
  std::ostringstream out;
  out << "m=" << action.m() << " n=" << action.n() << " a=" << action.a()
      << "  S=" << norm_sum(action) << "\n"
      << "  |H^1| = " << h1_order(action) << ", |H^2| = " << h2_order(action);
  if (const auto bf = bruteforce_if_feasible(action)) out << " (brute force " << *bf << ")";
  out << "\n";
  for (const auto& c : list_classes(action)) {
    out << "  class " << c.rep << ": order " << c.order << ", splits after inflation by "
        << c.splitting << "\n";
  }
  return out.str();
}

std::vector<Nat> prime_powers_up_to(Nat q_max) {
  std::vector<Nat> out;
  for (Nat q = 2; q <= q_max; ++q) {
    if (factor_prime_power(q)) out.push_back(q);
  }
  return out;
}

std::vector<ClassifyReport> atlas(Nat q_max, Nat e_max, Nat f_max) {
  std::vector<ClassifyReport> rows;
  for (Nat q : prime_powers_up_to(q_max)) {
    const auto field = LocalField::make(q);
    for (Nat e = 1; e <= e_max; ++e) {
      if (gcd(e, field.p()) != 1) continue;
      for (Nat f = 1; f <= f_max; ++f) rows.push_back(classify(TameShape::make(field, e, f)));
    }
  }
  return rows;
}

void write_atlas_csv(std::ostream& out, const std::vector<ClassifyReport>& rows) {
  out << "q,e,f,g,g_f,orbit_count,galoisian_count,abelian,orbits\n";
  for (const auto& row : rows) {
    out << row.q << ',' << row.e << ',' << row.f << ',' << row.g << ',' << row.g_f << ','
        << row.orbits.size() << ',' << row.galoisian_count() << ','
        << (row.abelian ? "true" : "false") << ',';
    for (std::size_t i = 0; i < row.orbits.size(); ++i) {
      const auto& o = row.orbits[i];
      if (i) out << ';';
      out << o.rep << ':' << o.members.size() << ':' << o.closure_degree << ':';
      if (o.split_degree) {
        out << *o.split_degree;
      } else {
        out << '-';
      }
      out << ':' << (o.group ? *o.group : std::string("-"));
    }
    out << '\n';
  }
}

}  // namespace tamecoh
