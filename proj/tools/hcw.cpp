#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hcw/acceptance.hpp"
#include "hcw/algebra.hpp"
#include "hcw/clifford.hpp"
#include "hcw/coxeter.hpp"
#include "hcw/error.hpp"
#include "hcw/group_io.hpp"
#include "hcw/hc_series.hpp"
#include "hcw/hecke_schur.hpp"

using namespace hcw;
using nlohmann::json;

namespace
{

enum class Format
{
  Default,
  Tsv,
  Json
};

struct Options
{
  Format format = Format::Default;
  GroupLimits limits;
  std::string group_path;
};

bool want_json(Options const &o, bool json_by_default)
{ return o.format == Format::Json || (o.format == Format::Default && json_by_default); }

void emit(json const &j)
{ std::cout << j.dump(2) << "\n"; }

std::string values_tsv(ClassFunction const &f)
{
  std::ostringstream os;
  os << "# class\torder\tsize\tvalue\n";
  auto const &cls = f.group().classes();
  for (std::size_t k = 0; k < cls.size(); ++k)
    os << cls[k].representative.to_string() << "\t" << cls[k].order << "\t" << cls[k].size << "\t"
       << f[k].to_string() << "\n";
  return os.str();
}

json values_json(ClassFunction const &f)
{
  json arr = json::array();
  for (auto const &v : f.values())
    arr.push_back(v.to_string());
  return arr;
}

json constituents_json(CharTable const &t, ClassFunction const &f)
{
  json arr = json::array();
  for (auto const &[i, m] : t.constituents(f))
    arr.push_back({{"index", i}, {"multiplicity", m}, {"degree", t.degrees()[i]}});
  return arr;
}

std::string constituents_tsv(CharTable const &t, ClassFunction const &f)
{
  std::ostringstream os;
  os << "# constituent\tmultiplicity\tdegree\n";
  for (auto const &[i, m] : t.constituents(f))
    os << "chi_" << i << "\t" << m << "\t" << t.degrees()[i] << "\n";
  return os.str();
}

std::size_t checked_index(std::size_t i, std::size_t size, std::string const &what)
{
  if (i >= size)
    throw ValidationError(what + " index " + std::to_string(i) + " out of range (size " +
                          std::to_string(size) + ")");
  return i;
}

PermGroup named_group(std::string const &name)
{
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'S')) {
    auto const n = std::stoul(name.substr(1));
    if (n >= 1 && n <= 8)
      return name[0] == 'C' ? cyclic_group(static_cast<unsigned>(n))
                            : symmetric_group(static_cast<unsigned>(n));
  }
  throw ValidationError("unknown group name '" + name + "'; use Cn or Sn with n <= 8");
}

// ---- subcommands -------------------------------------------------------

void run_table(Options const &o, std::string const &subgroup)
{
  auto const file = load_group_file(o.group_path, o.limits);
  PermGroup const g = subgroup.empty() ? file.group : file.resolve_subgroup(subgroup);
  CharTable const t(g);
  if (!t.check_orthogonality().ok())
    throw InvariantViolation("computed table fails the orthogonality relations");
  if (want_json(o, false))
    emit(t.to_json());
  else
    std::cout << t.to_tsv();
}

void run_clifford(Options const &o, std::string const &normal, std::optional<std::size_t> index)
{
  auto const file = load_group_file(o.group_path, o.limits);
  CharTable const mt(file.group);
  CharTable const nt(file.resolve_subgroup(normal));

  std::vector<std::size_t> thetas;
  if (index)
    thetas.push_back(checked_index(*index, nt.size(), "character"));
  else
    for (std::size_t i = 0; i < nt.size(); ++i)
      thetas.push_back(i);

  std::vector<CliffordReport> reports;
  for (auto th : thetas) {
    regular_sum_check(mt, nt, th);
    reports.push_back(clifford_decomposition(mt, nt, th));
  }

  if (want_json(o, true)) {
    if (reports.size() == 1) {
      emit(reports.front().to_json());
    } else {
      json arr = json::array();
      for (auto const &r : reports)
        arr.push_back(r.to_json());
      emit(arr);
    }
    return;
  }
  std::cout << "# theta\torbit\t|Omega|\tabove\tlabel_dims\textendable\tgallagher_bijective\n";
  for (auto const &r : reports) {
    auto list = [](auto const &v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
      return s.empty() ? "-" : s;
    };
    std::cout << r.theta << "\t" << list(r.orbit) << "\t" << r.omega_order << "\t" << list(r.above)
              << "\t" << list(r.label_dims) << "\t" << (r.extendable ? "yes" : "no") << "\t"
              << (r.gallagher_bijective ? "yes" : "no") << "\n";
  }
}

void run_wreath(Options const &o, std::string const &k_name, std::size_t index, unsigned m)
{
  PermGroup k;
  if (!o.group_path.empty())
    k = load_group_file(o.group_path, o.limits).group;
  else if (!k_name.empty())
    k = named_group(k_name);
  else
    throw ValidationError("wreath needs --group or --k");
  if (m < 1 || m > 6)
    throw ValidationError("--m must be between 1 and 6");

  CharTable const t(k);
  auto const &theta = t[checked_index(index, t.size(), "character")];
  auto const w = wreath_extension(theta, m);
  bool const irreducible = inner_product(w.character, w.character) == Cyclotomic(1);
  bool const restricts = restrict(w.character, w.base) == outer_tensor_power(theta, w.base, m);
  if (!irreducible || !restricts)
    throw InvariantViolation("wreath extension fails its defining properties");

  if (want_json(o, false)) {
    emit({{"order", w.wreath.order()},
          {"m", m},
          {"degree", w.character.degree().to_string()},
          {"irreducible", irreducible},
          {"restriction_is_tensor_power", restricts},
          {"values", values_json(w.character)}});
    return;
  }
  std::cout << "# order\t" << w.wreath.order() << "\n# m\t" << m << "\n# degree\t"
            << w.character.degree().to_string() << "\n"
            << values_tsv(w.character);
}

void run_hc(Options const &o, std::string const &action, std::string const &record,
            std::optional<std::size_t> index)
{
  auto const datum = BNDatum::from_group_file(load_group_file(o.group_path, o.limits));

  if (action == "partition") {
    auto const map = hc_partition(datum);
    if (want_json(o, false))
      emit(map.to_json(datum));
    else
      std::cout << map.to_tsv(datum);
    return;
  }

  if (record.empty())
    throw ValidationError("hc " + action + " needs --record");
  auto const r = datum.record_index(record);
  auto const &lt = datum.levi_table(r);
  auto const &gt = datum.table();

  if (action == "restrict") {
    if (!index)
      throw ValidationError("hc restrict needs --char-index");
    auto const f = hc_restrict(datum, r, gt[checked_index(*index, gt.size(), "character")]);
    if (want_json(o, false))
      emit({{"record", record}, {"values", values_json(f)}, {"constituents", constituents_json(lt, f)}});
    else
      std::cout << values_tsv(f) << constituents_tsv(lt, f);
    return;
  }

  std::size_t tau = 0;
  if (index) {
    tau = checked_index(*index, lt.size(), "Levi character");
  } else {
    auto const triv = ClassFunction::trivial(lt.group());
    while (tau < lt.size() && lt[tau] != triv)
      ++tau;
  }
  auto const f = hc_induce(datum, r, lt[tau]);

  if (action == "induce") {
    if (want_json(o, false))
      emit({{"record", record}, {"tau", tau}, {"values", values_json(f)},
            {"constituents", constituents_json(gt, f)}});
    else
      std::cout << values_tsv(f) << constituents_tsv(gt, f);
    return;
  }

  if (action == "qparam") {
    auto const q = q_parameter(f, gt);
    std::string const qs = q ? q->get_str() : "undefined";
    if (want_json(o, false))
      emit({{"record", record}, {"tau", tau}, {"q", q ? json(qs) : json(nullptr)}});
    else
      std::cout << "# record\ttau\tq\n" << record << "\t" << tau << "\t" << qs << "\n";
    return;
  }
  throw ValidationError("unknown hc action '" + action + "'");
}

void run_coxeter(Options const &o, std::string const &type)
{
  auto const w = coxeter_group(type);
  auto const rep = separation_report(w);
  if (!verify_separation(w, rep))
    throw InvariantViolation("separation report does not match the exhaustive scan");
  if (!want_json(o, false)) {
    std::cout << separation_tsv(w, rep);
    return;
  }
  auto const labels = character_labels(w);
  auto const b = b_invariants(w);
  auto const deg = w.table->degrees();
  json pairs = json::array();
  for (auto const &p : rep)
    pairs.push_back({{"first", {{"index", p.first}, {"label", labels[p.first]}, {"degree", deg[p.first]}, {"b", b[p.first]}}},
                     {"second", {{"index", p.second}, {"label", labels[p.second]}, {"degree", deg[p.second]}, {"b", b[p.second]}}}});
  emit({{"type", type}, {"order", w.group.order()}, {"unseparated", pairs}});
}

void run_schur(Options const &o, std::string const &action, std::string const &type, unsigned k,
               std::string const &q_text)
{
  if (action == "g2-table") {
    if (want_json(o, false))
      emit(g2_table_json());
    else
      std::cout << g2_table_tsv();
    return;
  }
  if (action != "ratio")
    throw ValidationError("unknown schur action '" + action + "'");

  Rational q0;
  try {
    q0 = Rational(q_text);
    q0.canonicalize();
  } catch (std::exception const &) {
    throw ValidationError("--q must be a rational number");
  }
  if (sgn(q0) <= 0)
    throw ValidationError("--q must be positive");

  SchurElement big, small;
  if (type == "a1") {
    std::tie(big, small) = schur_a1(k);
  } else if (type == "g2") {
    big = schur_g2(k, 1);
    small = schur_g2(k, 2);
  } else {
    throw ValidationError("--type must be a1 or g2");
  }
  Rational const r = schur_ratio(big, small, q0);
  if (want_json(o, false))
    emit({{"type", type}, {"k", k}, {"q", q0.get_str()}, {"numerator", big.label},
          {"denominator", small.label}, {"ratio", r.get_str()}});
  else
    std::cout << "# type\tk\tq\tratio\n" << type << "\t" << k << "\t" << q0.get_str() << "\t"
              << r.get_str() << "\n";
}

void run_corner(Options const &o, std::string const &omega, std::string const &weyl,
                std::string const &action, std::size_t eta)
{
  auto const s = named_skew_algebra(omega, weyl, action);
  CharTable const t(s.omega());
  auto const rep = corner_report(s, t, checked_index(eta, t.size(), "eta"));
  if (!rep.isomorphism() || rep.corner_dim != rep.stabilizer_order)
    throw InvariantViolation("corner does not match the stabilizer group algebra");

  auto const e = s.embed(central_idempotents_abelian(t)[eta]);
  auto const c = corner(s.algebra, e);
  std::vector<std::string> basis;
  for (auto const &b : c.basis)
    basis.push_back(s.algebra.format(b));

  if (want_json(o, true)) {
    json j = rep.to_json();
    j["algebra_dim"] = s.algebra.dim();
    j["basis"] = basis;
    emit(j);
    return;
  }
  std::cout << "# eta\tcorner_dim\tstabilizer_order\tisomorphism\n"
            << rep.eta << "\t" << rep.corner_dim << "\t" << rep.stabilizer_order << "\t"
            << (rep.isomorphism() ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < basis.size(); ++i)
    std::cout << "# basis\t" << i << "\t" << basis[i] << "\n";
}

int run_verify(Options const &o, std::string const &corpus)
{
  auto const results = run_acceptance(corpus);
  if (want_json(o, false))
    emit(acceptance_json(results));
  else
    std::cout << acceptance_report(results);
  for (auto const &r : results)
    if (!r.pass)
      return 1;
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Character theory toolkit for finite groups with BN-pairs"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string format = "default";
  app.add_option("--format", format, "Output format: tsv or json (default depends on subcommand)")
      ->check(CLI::IsMember({"default", "tsv", "json"}));
  app.add_option("--max-order", opt.limits.max_order, "Largest group order accepted")
      ->capture_default_str();
  app.add_option("--max-classes", opt.limits.max_classes, "Largest class count accepted")
      ->capture_default_str();

  std::string subgroup, normal, record, k_name, type, q_text = "2", action, omega, weyl, act;
  std::string hc_action, schur_action;
  std::optional<std::size_t> char_index;
  std::size_t wreath_index = 0, eta = 0;
  unsigned m = 2, k = 1;
  std::string corpus = HCW_CORPUS_DIR;

  auto *table = app.add_subcommand("table", "Character table of a group file");
  table->add_option("--group", opt.group_path, "Group JSON file")->required();
  table->add_option("--subgroup", subgroup, "Named subgroup or ';'-separated generators");

  auto *clifford = app.add_subcommand("clifford", "Clifford decomposition over a normal subgroup");
  clifford->add_option("--group", opt.group_path, "Group JSON file")->required();
  clifford->add_option("--normal", normal, "Named normal subgroup or generators")->required();
  clifford->add_option("--char-index", char_index, "Index in Irr(N); all if omitted");

  auto *wreath = app.add_subcommand("wreath", "Canonical extension of theta^m to K wr S_m");
  wreath->add_option("--group", opt.group_path, "Group JSON file for K");
  wreath->add_option("--k", k_name, "Named K: Cn or Sn");
  wreath->add_option("--char-index", wreath_index, "Index of theta in Irr(K)");
  wreath->add_option("--m", m, "Number of tensor factors")->capture_default_str();

  auto *hc = app.add_subcommand("hc", "Harish-Chandra series on a BN datum");
  hc->add_option("action", hc_action, "partition, induce, restrict or qparam")
      ->required()
      ->check(CLI::IsMember({"partition", "induce", "restrict", "qparam"}));
  hc->add_option("--group", opt.group_path, "BN datum JSON file")->required();
  hc->add_option("--record", record, "Parabolic record name");
  hc->add_option("--char-index", char_index, "Character index (Levi for induce/qparam, G for restrict)");

  auto *cox = app.add_subcommand("coxeter-sep", "Unseparated character pairs of a Weyl group");
  cox->add_option("--type", type, "A1..A4, B2, B3, D4, G2, F4 or I2(m)")->required();

  auto *schur = app.add_subcommand("schur", "Schur elements of Hecke algebras");
  schur->add_option("action", schur_action, "g2-table or ratio")
      ->required()
      ->check(CLI::IsMember({"g2-table", "ratio"}));
  schur->add_option("--type", type, "a1 or g2")->default_str("a1");
  schur->add_option("--k", k, "Parameter exponent")->capture_default_str();
  schur->add_option("--q", q_text, "Specialization of q")->capture_default_str();

  auto *corner_cmd = app.add_subcommand("corner", "Corner of a skew group algebra");
  corner_cmd->add_option("--omega", omega, "Abelian group: C3, C2xC2, ...")->required();
  corner_cmd->add_option("--weyl", weyl, "Acting group: C2 or 1")->required();
  corner_cmd->add_option("--action", act, "invert, swap or trivial")->required();
  corner_cmd->add_option("--eta", eta, "Index of eta in Irr(Omega)")->capture_default_str();

  auto *verify = app.add_subcommand("verify", "Run the acceptance suite on the bundled corpus");
  verify->add_option("--corpus", corpus, "Corpus directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return 2;
  }

  opt.format = format == "tsv" ? Format::Tsv : format == "json" ? Format::Json : Format::Default;
  if (type.empty())
    type = "a1";

  try {
    if (*table)
      run_table(opt, subgroup);
    else if (*clifford)
      run_clifford(opt, normal, char_index);
    else if (*wreath)
      run_wreath(opt, k_name, wreath_index, m);
    else if (*hc)
      run_hc(opt, hc_action, record, char_index);
    else if (*cox)
      run_coxeter(opt, type);
    else if (*schur)
      run_schur(opt, schur_action, type, k, q_text);
    else if (*corner_cmd)
      run_corner(opt, omega, weyl, act, eta);
    else if (*verify)
      return run_verify(opt, corpus);
  } catch (InvariantViolation const &e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
