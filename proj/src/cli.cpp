#include "spinsurf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "spinsurf/char_classes.hpp"
#include "spinsurf/errors.hpp"
#include "spinsurf/exact_arith.hpp"
#include "spinsurf/f2_forms.hpp"
#include "spinsurf/icosa_group.hpp"
#include "spinsurf/json_io.hpp"
#include "spinsurf/seifert.hpp"

namespace spinsurf::cli {

namespace {

// Every handler fills both renderings; the --json flag picks one.
struct Output {
  Json json = Json::object();
  std::ostringstream text;
};

using Handler = std::function<void(Output&)>;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot read input file " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

Json rational_strings(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& r : values) out.push_back(r.str());
  return out;
}

Json matrix_json(const Mat2F5& m) {
  return Json::array({Json::array({m.entry(0, 0), m.entry(0, 1)}), Json::array({m.entry(1, 0), m.entry(1, 1)})});
}

Json pairs_json(const SeifertData& d) {
  Json out = Json::array();
  for (const FiberPair& p : d.pairs()) out.push_back(Json::array({p.a, p.b}));
  return out;
}

Json spec_json(const RepSpec& spec) {
  Json profiles = Json::array();
  for (const EigenvalueProfile& p : spec.profiles) {
    profiles.push_back(Json{{"fiber", p.fiber}, {"s_values", rational_strings(p.s_values)}});
  }
  Json center = spec.center.is_trivial() ? Json("trivial") : Json{{"scalar_exponent", *spec.center.scalar_exponent}};
  return Json{{"N", spec.dimension}, {"center", center}, {"profiles", profiles}};
}

// e-invariant fields appended to a Seifert document.
void add_e_invariant(Output& o, const SeifertData& d, const RepSpec& spec) {
  const bool trivial = spec.center.is_trivial() || *spec.center.scalar_exponent % spec.dimension == 0;
  if (trivial) {
    const ModZ e = e_simple(d, spec);
    const std::int64_t order = order_in_pi3(e);
    o.json["formula"] = "simple";
    o.json["e_invariant"] = e.residue().str();
    if (const auto alias = e.alias()) o.json["e_invariant_alias"] = alias->str();
    o.json["order"] = order;
    o.text << "e = " << e.str() << " (order " << order << ")\n";
  } else {
    const ModZ v = e_general(d, spec);
    const auto orders = order_constraint_set(v, spec.dimension);
    o.json["formula"] = "general";
    o.json["two_re_n_e"] = v.residue().str();
    o.json["order"] = Json(orders);
    std::vector<std::string> listed;
    for (std::int64_t k : orders) listed.push_back(std::to_string(k));
    o.text << "2 Re(" << spec.dimension << " e) = " << v.str() << "\n"
           << "order of e in {" << join(listed, ", ") << "}\n";
  }
}

void arf_command(Output& o, int g, const std::string& bits, int cap) {
  const QuadraticForm q = QuadraticForm::from_bitstring(g, bits);
  const ArfValue arf = arf_basis(q);
  o.json["form"] = to_json(q);
  o.json["arf"] = arf.additive;
  o.json["arf_multiplicative"] = arf.multiplicative();
  o.text << "Arf = " << arf.additive << " (multiplicative " << arf.multiplicative() << ")\n";
  if (g <= cap) {
    const ArfValue gauss = arf_gauss(q, cap);
    if (gauss != arf) throw Error(ErrorKind::kInternalInvariant, "basis and Gauss-sum Arf invariants disagree");
    o.json["arf_gauss"] = gauss.additive;
    o.text << "Gauss-sum route agrees\n";
  } else {
    o.json["arf_gauss"] = nullptr;
  }
}

void forms_command(Output& o, int g, bool list, int cap) {
  const ArfCounts counts = count_by_arf(g, cap);
  o.json["g"] = g;
  o.json["n_plus"] = counts.n_plus;
  o.json["n_minus"] = counts.n_minus;
  o.text << "g = " << g << ": " << counts.n_plus << " forms with Arf 0, " << counts.n_minus
         << " with Arf 1 (total " << counts.n_plus + counts.n_minus << ")\n";
  if (list) {
    Json forms = Json::array();
    for (const QuadraticForm& q : enumerate_forms(g, cap)) {
      const int arf = arf_basis(q).additive;
      Json f = to_json(q);
      f["arf"] = arf;
      forms.push_back(f);
      o.text << q.bitstring() << " " << arf << "\n";
    }
    o.json["forms"] = forms;
  }
}

void zeros_command(Output& o, int g, const std::string& bits, int cap) {
  const QuadraticForm q = QuadraticForm::from_bitstring(g, bits);
  const std::uint64_t zeros = count_zeros(q, cap);
  const ArfValue arf = arf_basis(q);
  o.json["form"] = to_json(q);
  o.json["zeros"] = zeros;
  o.json["vectors"] = std::uint64_t{1} << (2 * g);
  o.json["arf"] = arf.additive;
  o.text << "zeros = " << zeros << " of " << (std::uint64_t{1} << (2 * g)) << " vectors (Arf " << arf.additive
         << ")\n";
}

void bernoulli_command(Output& o, int k) {
  const Rational b = bernoulli(k);
  const Rational ratio = bernoulli_ratio(k);
  o.json["k"] = k;
  o.json["bernoulli"] = to_json(b);
  o.json["ratio"] = to_json(ratio);
  o.text << "B_" << k << " = " << b << "\n"
         << "B_" << k << "/" << 2 * k << " = " << ratio << "\n";
}

void vonstaudt_command(Output& o, int from, int to) {
  if (from < 1 || to < from) throw Error(ErrorKind::kInvalidArgument, "need 1 <= k <= max-k");
  Json rows = Json::array();
  bool all_agree = true;
  for (int k = from; k <= to; ++k) {
    const BigInt product = von_staudt_den(k);
    const BigInt exact = bernoulli_ratio_den(k);
    const bool agree = product == exact;
    all_agree = all_agree && agree;
    rows.push_back(Json{{"k", k}, {"product_formula", to_string(product)}, {"exact", to_string(exact)},
                        {"agree", agree}});
    o.text << "k = " << k << ": product " << product << ", den(B_" << k << "/" << 2 * k << ") = " << exact
           << (agree ? "" : "  MISMATCH") << "\n";
  }
  o.json["rows"] = rows;
  o.json["all_agree"] = all_agree;
}

void divisibility_command(Output& o, int n, bool spin) {
  o.json["index"] = n;
  if (!spin) {
    const BigInt d = divisor_oriented(n);
    o.json["oriented_divisor"] = to_string(d);
    o.text << "kappa_" << n << " is divisible by " << d << " (oriented bundles, maximal)\n";
    return;
  }
  const DivisibilityBound b = divisor_spin(n);
  o.json["oriented_divisor"] = to_string(b.oriented_divisor);
  o.json["spin_divisor"] = to_string(b.spin_divisor);
  o.json["spin_formula"] = b.spin_formula;
  o.json["maximality"] = maximality_name(b.spin_maximality);
  o.text << "kappa_" << n << " (spin): " << b.spin_formula << " = " << b.spin_divisor << " ["
         << maximality_name(b.spin_maximality) << "]\n";
}

void kappa_command(Output& o, const std::string& family, int n) {
  IntPolynomial k({});
  if (family == "sphere") {
    k = sphere_kappa(n);
    if (k != sphere_kappa_closed(n)) throw Error(ErrorKind::kInternalInvariant, "sphere kappa recursion mismatch");
  } else if (family == "proj") {
    k = proj_bundle_kappa(n);
  } else if (family == "hp") {
    k = hp_infinity_kappa(n);
  } else {
    k = IntPolynomial::constant({"u"}, torus_kappa(n));
  }
  o.json["family"] = family;
  o.json["n"] = n;
  o.json["kappa"] = to_json(k);
  o.text << "kappa_" << n << " = " << k.str() << "\n";
}

void lambda_command(Output& o, const std::string& family, int n) {
  o.json["family"] = family;
  o.json["n"] = n;
  if (family == "torus") {
    const IntPolynomial l = torus_lambda(n);
    o.json["lambda"] = to_json(l);
    o.json["kappa"] = to_json(IntPolynomial::constant({"u"}, torus_kappa(n)));
    o.text << "lambda_" << n << " = " << l.str() << "\nkappa_" << n << " = 0\n";
    return;
  }
  const IntPolynomial integral = sphere_lambda_integral(n);
  const QuotientedPolynomial reduced = sphere_lambda(n);
  const QuotientedPolynomial kappa = sphere_kappa_in_quotient(n);
  const QuotientedPolynomial diff = lambda_kappa_difference(n);
  o.json["lambda_integral"] = to_json(integral);
  o.json["lambda"] = to_json(reduced.base());
  o.json["kappa"] = to_json(kappa.base());
  o.json["difference"] = to_json(diff.base());
  o.json["ring"] = "Z[c2,c3]/(2 c3)";
  o.text << "lambda_" << n << " = " << integral.str() << "  (over Z[c2,c3])\n"
         << "lambda_" << n << " = " << reduced.str() << "  (mod 2 c3)\n"
         << "kappa_" << n << " = " << kappa.str() << "  (p1 = -c2)\n"
         << "lambda_" << n << " - kappa_" << n << " = " << diff.str() << "\n";
}

void rr_command(Output& o, int g, int m) {
  const std::int64_t ker = riemann_roch_dim(g, m).dimension;
  const std::int64_t coker = riemann_roch_dim(g, 1 - m).dimension;
  const bool holds = serre_duality_check(g, m);
  o.json["genus"] = g;
  o.json["power"] = m;
  o.json["kernel"] = ker;
  o.json["cokernel"] = coker;
  o.json["index"] = ker - coker;
  o.json["index_identity_holds"] = holds;
  o.text << "dim ker = " << ker << ", dim coker = " << coker << ", index = " << ker - coker << " (expected "
         << (2 * std::int64_t{m} - 1) * (g - 1) << ")\n";
  if (!holds) throw Error(ErrorKind::kInternalInvariant, "index identity fails");
}

void seifert_check_command(Output& o, const std::string& path) {
  const Json input = parse_json_text(read_input(path));
  const SeifertDocument doc = seifert_document_from_json(input);
  const Rational value = homology_sphere_value(doc.data);
  const bool sphere = is_integral_homology_sphere(doc.data);
  const Presentation p = presentation(doc.data);
  o.json = input;
  o.json["a"] = to_string(doc.data.product());
  o.json["homology_sphere_value"] = value.str();
  o.json["integral_homology_sphere"] = sphere;
  o.json["presentation"] = Json{{"generators", p.generators}, {"relations", p.relations}};
  o.text << "a = " << doc.data.product() << "\n"
         << "a * sum b_j/a_j = " << value << "\n"
         << "integral homology sphere: " << (sphere ? "yes" : "no") << "\n"
         << "pi_1 = < " << join(p.generators, ", ") << " | " << join(p.relations, ", ") << " >\n";
  if (doc.has_representation) {
    // Validates the profiles against the pairs.
    (void)e_general(doc.data, doc.spec);
    o.text << "representation profiles: consistent\n";
  }
}

void einvariant_input(Output& o, const std::string& path) {
  const Json input = parse_json_text(read_input(path));
  const SeifertDocument doc = seifert_document_from_json(input);
  if (!doc.has_representation) throw Error(ErrorKind::kParseError, "input has no representation (\"N\")");
  o.json = input;
  add_e_invariant(o, doc.data, doc.spec);
}

void einvariant_example(Output& o, int k) {
  const IcosahedralExample ex = icosahedral_example(k);
  o.json["pairs"] = pairs_json(ex.seifert);
  const Json spec = spec_json(ex.spec);
  for (const auto& [key, value] : spec.items()) o.json[key] = value;
  Json fibers = Json::array();
  o.text << "Example " << k << ": genus " << ex.genus << ", N = " << ex.spec.dimension << "\n";
  for (std::size_t j = 0; j < ex.fibers.size(); ++j) {
    const FiberDerivation& f = ex.fibers[j];
    fibers.push_back(Json{{"fiber", j + 1},
                          {"fixed_points", f.fixed_points},
                          {"trace", f.trace},
                          {"root_order", f.root_order},
                          {"exponents", f.multiplicities.exponents},
                          {"multiplicities", f.multiplicities.multiplicities}});
    std::vector<std::string> mults;
    for (std::size_t i = 0; i < f.multiplicities.exponents.size(); ++i) {
      mults.push_back("zeta_" + std::to_string(f.root_order) + "^" + std::to_string(f.multiplicities.exponents[i]) +
                      " x" + std::to_string(f.multiplicities.multiplicities[i]));
    }
    o.text << "  fiber " << j + 1 << ": " << f.fixed_points << " fixed points, trace " << f.trace << ", "
           << join(mults, ", ") << "\n";
  }
  o.json["example"] = Json{{"index", k}, {"genus", ex.genus}, {"fibers", fibers}};
  add_e_invariant(o, ex.seifert, ex.spec);
}

void stabilize_command(Output& o, std::int64_t n) {
  const ModZ e = stabilized_e(n);
  const ModZ inc = regular_representation_increment();
  o.json["n"] = n;
  o.json["e_invariant"] = to_json(e);
  o.json["increment"] = to_json(inc);
  o.text << "increment per regular summand = " << inc.str() << "\n"
         << "e after " << n << " stabilizations = " << e.str() << "\n";
}

void icosa_census(Output& o) {
  const auto census = element_order_census();
  Json orders = Json::object();
  o.text << "|SL2(F5)| = " << enumerate_group().size() << "\n";
  for (const auto& [order, count] : census) {
    orders[std::to_string(order)] = count;
    o.text << "  order " << order << ": " << count << "\n";
  }
  o.json["group_order"] = enumerate_group().size();
  o.json["center_order"] = group_center().size();
  o.json["quotient_order"] = quotient_order();
  o.json["element_orders"] = orders;
  o.text << "|center| = " << group_center().size() << ", |G/center| = " << quotient_order() << "\n";
}

void icosa_verify(Output& o) {
  const bool perfect = verify_perfect();
  const auto center = group_center();
  const auto census = element_order_census();
  const bool unique_involution = census.count(2) == 1 && census.at(2) == 1;
  const PresentationTriple t = find_presentation_triple();
  const bool relations = presentation_relations_hold(t);
  Json profiles = Json::array();
  for (int m : {2, 3, 5}) {
    const RestrictionProfile p = regular_restriction_profile(m);
    profiles.push_back(Json{{"subgroup_order", m}, {"dimension", p.dimension}, {"copies", p.copies},
                            {"multiplicities", p.multiplicities}, {"character", p.character}});
    o.text << "restriction to Z/" << m << ": " << p.copies << " copies of the regular representation\n";
  }
  o.json["group_order"] = enumerate_group().size();
  o.json["perfect"] = perfect;
  o.json["center_order"] = center.size();
  o.json["unique_involution"] = unique_involution;
  o.json["triple"] = Json{{"h", matrix_json(t.h)}, {"x1", matrix_json(t.x1)}, {"x2", matrix_json(t.x2)},
                          {"x3", matrix_json(t.x3)}};
  o.json["relations_hold"] = relations;
  o.json["restrictions"] = profiles;
  o.text << "perfect: " << (perfect ? "yes" : "no") << "\n"
         << "center order: " << center.size() << "\n"
         << "unique involution: " << (unique_involution ? "yes" : "no") << "\n"
         << "x1 = " << t.x1.str() << ", x2 = " << t.x2.str() << ", x3 = " << t.x3.str() << "\n"
         << "relations hold: " << (relations ? "yes" : "no") << "\n";
  if (!(perfect && center.size() == 2 && unique_involution && relations)) {
    throw Error(ErrorKind::kInternalInvariant, "group model verification failed");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of spin surface bundles and Seifert homology spheres", "spinsurf"};
  app.require_subcommand(1, 1);
  app.fallthrough(false);

  bool json = false;
  Handler handler;
  auto sub = [&](const std::string& name, const std::string& description) {
    CLI::App* s = app.add_subcommand(name, description);
    s->add_flag("--json", json, "Emit JSON");
    return s;
  };

  int g = 1;
  int cap = kDefaultEnumerationCap;
  std::string bits;
  auto* arf = sub("arf", "Arf invariant of a quadratic form");
  arf->add_option("--g", g, "Genus")->required();
  arf->add_option("--basis-values", bits, "q on a_1..a_g, b_1..b_g as a bitstring")->required();
  arf->add_option("--cap", cap, "Largest genus for exhaustive enumeration");
  arf->callback([&] { handler = [&](Output& o) { arf_command(o, g, bits, cap); }; });

  bool list = false;
  auto* forms = sub("forms", "Count (or list) quadratic forms by Arf invariant");
  forms->add_option("--g", g, "Genus")->required();
  forms->add_flag("--list", list, "List every form");
  forms->add_option("--cap", cap, "Largest genus for exhaustive enumeration");
  forms->callback([&] { handler = [&](Output& o) { forms_command(o, g, list, cap); }; });

  auto* zeros = sub("zeros", "Number of zeros of a quadratic form");
  zeros->add_option("--g", g, "Genus")->required();
  zeros->add_option("--basis-values", bits, "q on a_1..a_g, b_1..b_g as a bitstring")->required();
  zeros->add_option("--cap", cap, "Largest genus for exhaustive enumeration");
  zeros->callback([&] { handler = [&](Output& o) { zeros_command(o, g, bits, cap); }; });

  int k = 1;
  auto* bern = sub("bernoulli", "Bernoulli number B_k and B_k/2k");
  bern->add_option("--k", k, "Index k >= 1")->required();
  bern->callback([&] { handler = [&](Output& o) { bernoulli_command(o, k); }; });

  int max_k = 0;
  auto* vs = sub("vonstaudt", "Denominators of B_k/2k by the prime-power product and exactly");
  auto* vs_k = vs->add_option("--k", k, "Single index");
  auto* vs_max = vs->add_option("--max-k", max_k, "All indices 1..max-k");
  vs_k->excludes(vs_max);
  vs->callback([&] {
    if (vs_max->count() == 0 && vs_k->count() == 0) throw CLI::RequiredError("--k or --max-k");
    const int from = vs_max->count() ? 1 : k;
    const int to = vs_max->count() ? max_k : k;
    handler = [&, from, to](Output& o) { vonstaudt_command(o, from, to); };
  });

  int index = 1;
  bool spin = false;
  auto* div = sub("divisibility", "Divisibility of the MMM-class kappa_n");
  div->add_option("--index", index, "n")->required();
  div->add_flag("--spin", spin, "Spin surface bundles");
  div->callback([&] { handler = [&](Output& o) { divisibility_command(o, index, spin); }; });

  std::string family;
  int n = 0;
  auto* kappa = sub("kappa", "MMM-class of a genus-0 or genus-1 universal bundle");
  kappa->add_option("--family", family, "Bundle family")
      ->required()
      ->check(CLI::IsMember({"sphere", "proj", "hp", "torus"}));
  kappa->add_option("--n", n, "Index")->required()->check(CLI::NonNegativeNumber);
  kappa->callback([&] { handler = [&](Output& o) { kappa_command(o, family, n); }; });

  auto* lambda = sub("lambda", "Analytic MMM-class lambda_n");
  lambda->add_option("--family", family, "Bundle family")->required()->check(CLI::IsMember({"sphere", "torus"}));
  lambda->add_option("--n", n, "Index")->required()->check(CLI::NonNegativeNumber);
  lambda->callback([&] { handler = [&](Output& o) { lambda_command(o, family, n); }; });

  int genus = 0;
  int power = 0;
  auto* rr = sub("rr", "Kernel dimension of the Cauchy-Riemann operator on K^m");
  rr->add_option("--genus", genus, "Genus")->required();
  rr->add_option("--power", power, "Power m of the canonical bundle")->required();
  rr->callback([&] { handler = [&](Output& o) { rr_command(o, genus, power); }; });

  std::string input;
  auto* sc = sub("seifert-check", "Homology-sphere criterion and presentation of a Seifert manifold");
  sc->add_option("--input", input, "Seifert document (- for stdin)")->required();
  sc->callback([&] { handler = [&](Output& o) { seifert_check_command(o, input); }; });

  int example = 0;
  auto* ei = sub("einvariant", "e-invariant of a flat bundle over a Seifert homology sphere");
  auto* ei_input = ei->add_option("--input", input, "Seifert document (- for stdin)");
  auto* ei_example = ei->add_option("--example", example, "Icosahedral example")->check(CLI::Range(1, 3));
  ei_input->excludes(ei_example);
  ei->callback([&] {
    if (ei_input->count() == 0 && ei_example->count() == 0) throw CLI::RequiredError("--input or --example");
    if (ei_input->count()) {
      handler = [&](Output& o) { einvariant_input(o, input); };
    } else {
      handler = [&](Output& o) { einvariant_example(o, example); };
    }
  });

  std::int64_t copies = 0;
  auto* stab = sub("stabilize", "Example 3 plus n regular-representation summands");
  stab->add_option("--n", copies, "Number of summands")->required()->check(CLI::NonNegativeNumber);
  stab->callback([&] { handler = [&](Output& o) { stabilize_command(o, copies); }; });

  bool census = false;
  bool verify = false;
  auto* icosa = sub("icosa", "The binary icosahedral group as SL2(F5)");
  auto* icosa_census_flag = icosa->add_flag("--census", census, "Element-order census");
  auto* icosa_verify_flag = icosa->add_flag("--verify", verify, "Check the group-model properties");
  icosa_census_flag->excludes(icosa_verify_flag);
  icosa->callback([&] {
    if (!census && !verify) throw CLI::RequiredError("--census or --verify");
    if (census) {
      handler = icosa_census;
    } else {
      handler = icosa_verify;
    }
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    Output o;
    handler(o);
    if (json) {
      out << o.json.dump(2) << "\n";
    } else {
      out << o.text.str();
    }
    return 0;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace spinsurf::cli
