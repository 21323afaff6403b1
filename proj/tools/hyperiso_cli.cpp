#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "hyperiso/bench.hpp"
#include "hyperiso/descent.hpp"
#include "hyperiso/io_json.hpp"
#include "hyperiso/moduli.hpp"

using namespace hyperiso;

namespace {

enum Exit { kOk = 0, kNotEquivalent = 2, kPrecondition = 3, kCapability = 4 };

json load(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  return json::parse(in);
}

bool same_field(const json& a, const json& b) {
  return field_from_json(a).index() == field_from_json(b).index() && a.value("char", json()) == b.value("char", json()) &&
         a.value("deg", 1) == b.value("deg", 1);
}

struct Globals {
  uint64_t seed = 1;
  bool json_out = false;
  double time_cap = 0;
};

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json_out) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

template <class K>
std::string isom_text(const FormOps<K>& ops, const IsomResult<K>& r) {
  std::ostringstream os;
  os << r.size() << " isomorphism(s), method " << r.method << (r.fallback ? " (enumeration)" : "") << "\n";
  for (size_t i = 0; i < r.size(); ++i)
    os << "  " << ops.mat_str(r.matrices[i]) << "  scalar " << ops.field().str(r.scalars[i]) << "\n";
  return os.str();
}

template <class K>
IsomResult<K> run_isom(const FormOps<K>& ops, const Form<K>& f1, const Form<K>& f2, const std::string& method,
                       const std::string& preset, uint64_t seed) {
  if (method == "fast") return is_gl2_equiv_fast(ops, f1, f2);
  if (method == "oracle") {
    if constexpr (K::finite) return oracle_isom(ops, f1, f2);
    else throw CapabilityError("the enumeration oracle needs a finite field");
  }
  auto cfg = preset == "deep" ? CovariantSearchConfig::deep(f1.degree(), seed) : CovariantSearchConfig::generic(seed);
  return is_gl2_equiv_covariant(ops, f1, f2, cfg);
}

// Calls fn(field, form_json...) on the field of the first form.
template <class Fn>
int with_field(const json& field, Fn&& fn) {
  return std::visit([&](const auto& k) { return fn(k); }, field_from_json(field));
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, ',');) v.push_back(std::stoi(t));
  return v;
}

template <class K>
json curve_iso_json(const K& k, const CurveIso<K>& c) {
  return json{{"M", matrix_to_json(k, c.M)}, {"e", elem_to_json(k, c.e)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isomorphisms, automorphisms and descent of binary forms and hyperelliptic curves"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "random seed");
  app.add_flag("--json", g.json_out, "JSON output");
  app.add_option("--time-cap", g.time_cap, "seconds before giving up (bench: per trial)");

  std::string f1_path, f2_path, method = "auto", preset = "generic";
  bool check = false;
  auto* isom = app.add_subcommand("isom", "isomorphisms between two forms");
  isom->add_option("f1", f1_path)->required();
  isom->add_option("f2", f2_path)->required();
  isom->add_option("--method", method)->check(CLI::IsMember({"fast", "covariant", "auto", "oracle"}));
  isom->add_option("--preset", preset)->check(CLI::IsMember({"generic", "deep"}));
  isom->add_flag("--check", check, "exit with status 2 when the forms are not equivalent");

  auto* aut = app.add_subcommand("aut", "automorphisms of a form");
  aut->add_option("f", f1_path)->required();
  aut->add_option("--method", method)->check(CLI::IsMember({"fast", "covariant", "auto", "oracle"}));

  auto* oracle = app.add_subcommand("oracle", "isomorphisms by enumeration of PGL2(F_q)");
  oracle->add_option("f1", f1_path)->required();
  oracle->add_option("f2", f2_path)->required();

  std::string recipe_path;
  auto* cov = app.add_subcommand("covariant", "covariants");
  auto* cov_eval = cov->add_subcommand("eval", "evaluate a recipe on a form");
  cov_eval->add_option("recipe", recipe_path, "recipe JSON file")->required();
  cov_eval->add_option("f", f1_path)->required();
  cov->require_subcommand(1);

  std::string inv_path;
  auto* invs = app.add_subcommand("invariants", "invariant values of a form");
  invs->add_option("f", f1_path)->required();
  invs->add_option("--invariants", inv_path, "JSON list of order 0 recipes");
  auto* moduli = app.add_subcommand("moduli", "canonical moduli point and its field");
  moduli->add_option("f", f1_path)->required();
  moduli->add_option("--invariants", inv_path, "JSON list of order 0 recipes");

  unsigned max_ext = 4;
  bool lift = false;
  auto* curve = app.add_subcommand("curve", "hyperelliptic curves");
  curve->require_subcommand(1);
  auto* curve_isom = curve->add_subcommand("isom", "curve isomorphisms");
  curve_isom->add_option("X1", f1_path)->required();
  curve_isom->add_option("X2", f2_path)->required();
  curve_isom->add_flag("--lift-twists", lift, "lift twists to the quadratic extension");
  auto* curve_aut = curve->add_subcommand("aut", "reduced automorphism group order");
  curve_aut->add_option("X", f1_path)->required();
  curve_aut->add_option("--max-ext", max_ext, "largest extension degree swept");

  std::string dmethod = "covariant", qs = "1,2,3";
  unsigned target_s = 1;
  uint64_t fgd_p = 17;
  auto* descend = app.add_subcommand("descend", "model over a smaller field");
  descend->add_option("curve", f1_path);
  descend->add_option("--method", dmethod)->check(CLI::IsMember({"cocycle", "covariant"}));
  descend->add_option("--target-subfield", target_s, "degree s of the target subfield F_{p^s}");
  auto* fgd = descend->add_subcommand("fgd", "genus 5 family with three rational parameters");
  fgd->add_option("--q", qs, "q4,q5,q6");
  fgd->add_option("--p", fgd_p, "prime");

  BenchConfig bc;
  std::string gs = "1,2,4,8,16,32,64,128,256,512,1024", methods = "fast,covariant", format = "csv";
  auto* bench = app.add_subcommand("bench", "timing table");
  bench->add_option("--gs", gs, "genera, comma separated");
  bench->add_option("--field", bc.field, "F<p> or Q");
  bench->add_option("--methods", methods, "fast,covariant");
  bench->add_option("--trials", bc.trials);
  bench->add_option("--format", format)->check(CLI::IsMember({"csv", "md"}));

  CLI11_PARSE(app, argc, argv);

  if (g.time_cap > 0 && !bench->parsed()) {
    std::thread([cap = g.time_cap] {
      std::this_thread::sleep_for(std::chrono::duration<double>(cap));
      std::fprintf(stderr, "error: time cap of %g s exceeded\n", cap);
      std::fflush(stdout);
      std::_Exit(kCapability);
    }).detach();
  }

  try {
    if (isom->parsed() || aut->parsed() || oracle->parsed()) {
      auto j1 = load(f1_path);
      auto j2 = aut->parsed() ? j1 : load(f2_path);
      if (!same_field(j1.at("field"), j2.at("field"))) throw PreconditionError("forms over different fields");
      if (oracle->parsed()) method = "oracle";
      return with_field(j1.at("field"), [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        FormOps<K> ops(k);
        auto f1 = form_from_json(k, j1), f2 = form_from_json(k, j2);
        auto r = run_isom(ops, f1, f2, method, preset, g.seed);
        emit(g, isom_to_json(k, r), isom_text(ops, r));
        return check && r.empty() ? kNotEquivalent : kOk;
      });
    }
    if (cov_eval->parsed()) {
      auto rj = load(recipe_path);
      auto r = recipe_from_json(rj);
      auto j1 = load(f1_path);
      return with_field(j1.at("field"), [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        FormOps<K> ops(k);
        auto f = form_from_json(k, j1);
        check_recipe(*r, f.degree());
        auto c = eval_recipe(ops, r, f);
        json out = form_to_json(k, c);
        out["recipe"] = r->str();
        std::ostringstream os;
        os << r->str() << " of order " << c.degree() << ":";
        for (auto& a : c.a) os << " " << k.str(a);
        os << "\n";
        emit(g, out, os.str());
        return kOk;
      });
    }
    if (invs->parsed() || moduli->parsed()) {
      auto j1 = load(f1_path);
      std::vector<RecipePtr> recipes;
      if (!inv_path.empty())
        for (auto& r : load(inv_path)) recipes.push_back(recipe_from_json(r));
      return with_field(j1.at("field"), [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        FormOps<K> ops(k);
        auto f = form_from_json(k, j1);
        if (recipes.empty()) recipes = default_invariants(f.degree());
        json vals = json::array();
        std::ostringstream os;
        if (invs->parsed()) {
          auto t = invariant_profile(ops, f, recipes);
          for (auto& v : t.values) vals.push_back(elem_to_json(k, v));
          for (size_t i = 0; i < t.values.size(); ++i)
            os << recipes[i]->str() << " (degree " << t.degrees[i] << "): " << k.str(t.values[i]) << "\n";
          emit(g, json{{"values", vals}, {"degrees", t.degrees}}, os.str());
        } else {
          auto mp = field_of_moduli(ops, f, recipes);
          for (auto& v : mp.representative) vals.push_back(elem_to_json(k, v));
          os << "representative:";
          for (auto& v : mp.representative) os << " " << k.str(v);
          os << "\nfield degree " << mp.field_degree << "\n";
          emit(g, json{{"representative", vals}, {"degrees", mp.degrees}, {"field", field_to_json(mp.field)},
                       {"field_degree", mp.field_degree}},
               os.str());
        }
        return kOk;
      });
    }
    if (curve_isom->parsed() || curve_aut->parsed()) {
      auto j1 = load(f1_path);
      auto j2 = curve_isom->parsed() ? load(f2_path) : j1;
      if (!same_field(j1.at("field"), j2.at("field"))) throw PreconditionError("curves over different fields");
      return with_field(j1.at("field"), [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        FormOps<K> ops(k);
        auto X1 = make_curve(ops, form_from_json(k, j1));
        if (curve_aut->parsed()) {
          if constexpr (!K::finite) {
            throw CapabilityError("automorphism sweeps need a finite field");
            return kCapability;
          } else {
            auto s = reduced_aut_order(ops, X1, max_ext, g.seed);
            std::ostringstream os;
            os << "reduced automorphism group order " << s.order << " (first reached over degree " << s.ext << ")\n";
            emit(g, json{{"genus", X1.genus}, {"reduced_order", s.order}, {"ext", s.ext}, {"counts", s.counts}}, os.str());
            return kOk;
          }
        }
        auto X2 = make_curve(ops, form_from_json(k, j2));
        auto r = curve_isoms(ops, X1, X2, lift);
        json isos = json::array(), tw = json::array();
        for (auto& c : r.isos) isos.push_back(curve_iso_json(k, c));
        for (size_t i = 0; i < r.twists.size(); ++i)
          tw.push_back(json{{"M", matrix_to_json(k, r.twists[i])}, {"scalar", elem_to_json(k, r.twist_scalars[i])}});
        json out{{"genus", X1.genus}, {"isomorphisms", isos}, {"twists", tw}};
        if (r.quad) {
          json q = json::array();
          for (auto& c : r.quad_isos) q.push_back(curve_iso_json(r.quad->field, c));
          out["quadratic_field"] = field_to_json(r.quad->field.desc());
          out["quadratic_isomorphisms"] = q;
        }
        std::ostringstream os;
        os << r.isos.size() << " curve isomorphism(s), " << r.twists.size() << " twist(s)\n";
        for (auto& c : r.isos) os << "  " << ops.mat_str(c.M) << "  e = " << k.str(c.e) << "\n";
        emit(g, out, os.str());
        return r.isos.empty() && check ? kNotEquivalent : kOk;
      });
    }
    if (fgd->parsed()) {
      auto q = parse_list(qs);
      if (q.size() != 3) throw PreconditionError("--q needs three values");
      PrimeField k(fgd_p);
      FormOps<PrimeField> ops(k);
      auto X = make_curve(ops, genus5_family_form(q[0], q[1], q[2], fgd_p));
      auto d = covariant_descend(ops, X, g.seed);
      if (!d.found) throw Error(d.diagnostic);
      if (!d.model) throw Error("model needs an extension of degree " + std::to_string(d.ext_degree));
      json out{{"input", form_to_json(k, X.f)}, {"model", form_to_json(k, *d.model)}, {"covariant", d.covariant},
               {"root_degree", d.root_degree}};
      std::ostringstream os;
      os << "model over F_" << fgd_p << ":";
      for (auto& a : d.model->a) os << " " << a;
      os << "\n";
      emit(g, out, os.str());
      return kOk;
    }
    if (descend->parsed()) {
      if (f1_path.empty()) throw PreconditionError("descend needs a curve file or the fgd subcommand");
      auto j1 = load(f1_path);
      return with_field(j1.at("field"), [&](const auto& k) -> int {
        using K = std::decay_t<decltype(k)>;
        FormOps<K> ops(k);
        auto f = form_from_json(k, j1);
        if (dmethod == "cocycle") {
          if constexpr (std::is_same_v<K, ExtField>) {
            auto X = make_curve(ops, f);
            auto c = build_cocycle(k, X.f, target_s);
            if (!c) throw Error("no cocycle closes, even over the quadratic extension");
            auto d = hilbert90_descend(*c, g.seed);
            json out{{"model", form_to_json(d.sub, d.model)}, {"A", matrix_to_json(c->top, d.A)},
                     {"top_field", field_to_json(c->top.desc())}, {"enlarged", c->enlarged}, {"twist", d.twist}};
            std::ostringstream os;
            os << "model over F_" << k.p() << "^" << target_s << (d.twist ? " (quadratic twist)" : "") << ":";
            for (auto& a : d.model.a) os << " " << d.sub.str(a);
            os << "\n";
            emit(g, out, os.str());
            return kOk;
          } else {
            throw CapabilityError("cocycle descent needs a field F_{p^r} with r > 1");
          }
        }
        auto X = make_curve(ops, f);
        auto d = covariant_descend(ops, X, g.seed);
        if (!d.found) throw Error(d.diagnostic);
        json out{{"covariant", d.covariant}, {"I", elem_to_json(k, d.I)}, {"J", elem_to_json(k, d.J)},
                 {"target", form_to_json(k, d.target)}, {"root_degree", d.root_degree}, {"ext_degree", d.ext_degree}};
        if (d.A) out["A"] = matrix_to_json(k, *d.A);
        if (d.model) out["model"] = form_to_json(k, *d.model);
        if (d.model_ext) out["model_ext"] = form_to_json(d.root_iso->ext.field, *d.model_ext);
        std::ostringstream os;
        os << "covariant " << d.covariant << ", root of degree " << d.root_degree << ", model over degree "
           << d.ext_degree << "\n";
        if (d.model) {
          os << "model:";
          for (auto& a : d.model->a) os << " " << k.str(a);
          os << "\n";
        }
        emit(g, out, os.str());
        return kOk;
      });
    }
    if (bench->parsed()) {
      bc.gs = parse_list(gs);
      bc.methods.clear();
      std::stringstream ss(methods);
      for (std::string t; std::getline(ss, t, ',');) bc.methods.push_back(t);
      bc.seed = g.seed;
      if (g.time_cap > 0) bc.time_cap = g.time_cap;
      auto rows = bench_table(bc);
      std::cout << (format == "md" ? bench_markdown(rows) : bench_csv(rows));
      return kOk;
    }
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapability;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
