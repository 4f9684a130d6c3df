#include "toricmin/report.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <sstream>

#include "toricmin/homology.hpp"
#include "toricmin/stratify.hpp"

namespace toricmin::report {

namespace {

Json strings(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json point(const RatVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

std::vector<int> binomials(int n) {
  std::vector<int> out(n + 1, 1);
  for (int k = 1; k <= n; ++k) out[k] = out[k - 1] * (n - k + 1) / k;
  return out;
}

void check(Json& checks, const std::string& name, bool ok, const std::string& detail = "") {
  checks[name] = ok;
  if (!ok) throw VerificationError(name + (detail.empty() ? "" : ": " + detail));
}

std::string seq(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Everything one arrangement needs, built on demand.
class Analysis {
 public:
  Analysis(const io::InputSpec& spec, const Options& opts) : spec_(spec), opts_(opts) {
    if (spec.kind == io::Kind::toric) {
      norm_ = toric::normalize(io::to_toric(spec));
      warnings_ = norm_.warnings;
    } else {
      arr_ = std::make_unique<hyper::Arrangement>(io::to_hyperplanes(spec, &warnings_));
    }
  }

  bool toric() const { return spec_.kind == io::Kind::toric; }
  int dim() const { return toric() ? norm_.arrangement.dim() : arr_->dim(); }
  bool cellular() const { return !toric() || norm_.arrangement.size() > 0; }

  void require_cells() const {
    if (!cellular()) throw InputError("empty arrangement: no cell structure");
  }

  const toric::FaceCategory& faces_toric() {
    require_cells();
    if (!fc_) fc_ = std::make_unique<toric::FaceCategory>(norm_.arrangement);
    return *fc_;
  }
  const hyper::FacePoset& faces_hyper() {
    if (!fp_) fp_ = std::make_unique<hyper::FacePoset>(hyper::face_poset(*arr_));
    return *fp_;
  }

  const strat::FaceModel& model() {
    if (!model_) {
      model_ = std::make_unique<strat::FaceModel>(toric() ? strat::face_model(faces_toric())
                                                          : strat::face_model(*arr_, faces_hyper()));
    }
    return *model_;
  }

  const hyper::OrderedCentral& a0() {
    if (!a0_) {
      std::optional<SignVector> base;
      if (opts_.base_chamber) {
        base = parse_signs(*opts_.base_chamber);
        if (static_cast<int>(base->size()) != model().normals.rows())
          throw InputError("--base-chamber needs one sign per hyperplane of A0");
      }
      a0_ = std::make_unique<hyper::OrderedCentral>(strat::ordered_a0(model(), base));
    }
    return *a0_;
  }

  const strat::SalvettiCategory& sal() {
    if (!sal_) sal_ = std::make_unique<strat::SalvettiCategory>(strat::salvetti_category(model(), a0()));
    return *sal_;
  }

  strat::Stratification& strata() {
    if (!strata_) strata_ = std::make_unique<strat::Stratification>(strat::stratify(model(), a0(), sal()));
    return *strata_;
  }

  const strat::SalvettiMatching& matching() {
    if (!matching_) {
      auto matcher = toric() ? strat::toric_matcher(faces_toric()) : strat::affine_matcher();
      matching_ = std::make_unique<strat::SalvettiMatching>(
          strat::salvetti_matching(model(), sal(), strata(), matcher));
    }
    return *matching_;
  }

  // Local NBC counts by codimension (toric) or Brieskorn coefficients.
  homology::Polynomial poincare() {
    if (toric()) {
      if (!cellular()) return homology::one_plus_t_power(norm_.deficiency + norm_.arrangement.dim());
      return toric::poincare_toric(toric::local_nbc_counts(faces_toric()), dim(), norm_.deficiency);
    }
    if (arr_->central()) {
      auto counts = arr_->size() ? hyper::nbc_counts(arr_->normals()) : std::vector<int>{1};
      return homology::Polynomial::from_ints(counts);
    }
    return strat::poincare_hyperplane(*arr_, faces_hyper());
  }

  // Poincare polynomial of the essential part, which the cell complexes model.
  homology::Polynomial poincare_essential() {
    if (toric()) return toric::poincare_toric(toric::local_nbc_counts(faces_toric()), dim(), 0);
    return poincare();
  }

  struct NerveResult {
    homology::Homology h;
    bool squares_to_zero = false;
    bool truncated = false;
  };

  NerveResult nerve(const AcyclicCategory& c) {
    const int height = c.max_rank();
    NerveResult r;
    int deg = opts_.max_deg;
    if (deg < 0 || deg >= height) {
      deg = height;
    } else {
      r.truncated = true;
    }
    auto cc = homology::nerve_chain_complex(c, r.truncated ? deg + 1 : -1);
    r.squares_to_zero = homology::boundary_squares_to_zero(cc);
    if (!r.squares_to_zero) throw VerificationError("boundary does not square to zero");
    r.h = homology::homology(cc, deg);
    return r;
  }

  Json input() {
    Json j;
    j["kind"] = io::kind_name(spec_.kind);
    j["dim"] = spec_.dim;
    j["items"] = spec_.vectors.size();
    j["canonical"] = io::serialize(spec_);
    j["warnings"] = warnings_;
    if (toric()) {
      j["essential_dim"] = norm_.arrangement.dim();
      j["deficiency"] = norm_.deficiency;
      j["normalized_items"] = norm_.arrangement.size();
    }
    return j;
  }

  Json layers() {
    Json j, list = Json::array();
    std::vector<int> by_dim(dim() + 1, 0);
    if (toric()) {
      if (!cellular()) {
        list.push_back({{"dim", dim()}, {"items", Json::array()}, {"key", Json::array()}});
        by_dim[dim()] = 1;
      } else {
        for (const auto& y : faces_toric().layers()) {
          list.push_back({{"dim", y.dim}, {"items", y.items}, {"key", strings(y.key)}, {"point", point(y.point)}});
          ++by_dim[y.dim];
        }
      }
    } else {
      for (const auto& x : hyper::intersection_poset(faces_hyper())) {
        list.push_back({{"dim", x.dim}, {"items", x.hyperplanes}});
        ++by_dim[x.dim];
      }
    }
    j["count"] = list.size();
    j["by_dim"] = by_dim;
    j["list"] = list;
    return j;
  }

  Json faces() {
    require_cells();
    Json j;
    std::vector<int> f;
    int morphisms = 0;
    if (toric()) {
      f = faces_toric().f_vector();
      morphisms = faces_toric().category().morphism_count();
      j["lift_hyperplanes"] = toric::lift(norm_.arrangement).size();
    } else {
      f = faces_hyper().f_vector();
      morphisms = model().faces.morphism_count();
      j["chambers"] = faces_hyper().chambers().size();
    }
    int euler = 0;
    for (size_t k = 0; k < f.size(); ++k) euler += (k % 2 ? -1 : 1) * f[k];
    j["f_vector"] = f;
    j["cells"] = std::accumulate(f.begin(), f.end(), 0);
    j["morphisms"] = morphisms;
    j["euler_characteristic"] = euler;
    return j;
  }

  Json nbc() {
    Json j;
    if (toric()) {
      if (!cellular()) {
        j["counts"] = std::vector<int>{1};
        j["sets"] = Json::array({{{"layer", 0}, {"items", Json::array()}}});
        return j;
      }
      Json sets = Json::array();
      for (const auto& x : toric::local_nbc(faces_toric())) sets.push_back({{"layer", x.layer}, {"items", x.items}});
      j["counts"] = toric::local_nbc_counts(faces_toric());
      j["sets"] = sets;
    } else if (arr_->central()) {
      auto normals = arr_->normals();
      auto sets = arr_->size() ? hyper::nbc_sets(normals) : std::vector<std::vector<int>>{{}};
      j["counts"] = arr_->size() ? hyper::nbc_counts(normals) : std::vector<int>{1};
      j["sets"] = sets;
    } else {
      j["counts"] = poincare().to_ints();
      Json per = Json::array();
      auto normals = arr_->normals();
      for (const auto& x : hyper::intersection_poset(faces_hyper())) {
        RatMatrix local(static_cast<Eigen::Index>(x.hyperplanes.size()), arr_->dim());
        for (size_t r = 0; r < x.hyperplanes.size(); ++r) local.row(r) = normals.row(x.hyperplanes[r]);
        auto counts = x.hyperplanes.empty() ? std::vector<int>{1} : hyper::nbc_counts(local);
        per.push_back({{"flat", x.hyperplanes}, {"codim", arr_->dim() - x.dim}, {"top", counts.back()}});
      }
      j["flats"] = per;
    }
    return j;
  }

  Json poincare_json() {
    Json j;
    auto p = poincare();
    j["polynomial"] = p.str();
    j["coefficients"] = p.to_ints();
    j["value_at_1"] = p.at(1).str();
    if (toric() && norm_.deficiency > 0) j["torus_factor"] = "(1 + t)^" + std::to_string(norm_.deficiency);
    return j;
  }

  Json salvetti() {
    require_cells();
    const auto& s = sal();
    std::vector<int> by_rank(dim() + 1, 0);
    for (int x = 0; x < s.category.object_count(); ++x) ++by_rank[s.category.rank(x)];
    Json j;
    j["objects"] = s.category.object_count();
    j["morphisms"] = s.category.morphism_count();
    j["objects_by_rank"] = by_rank;
    j["base_chamber"] = to_string(a0().order().base());
    return j;
  }

  Json matching_json() {
    require_cells();
    const auto& m = matching();
    auto& st = strata();
    Json j, strata_list = Json::array();
    for (const auto& s : st.strata) {
      strata_list.push_back({{"layer", s.y.layer},
                             {"chamber", to_string(a0().sub(model().layer_items[s.y.layer]).chambers[s.y.chamber])},
                             {"objects", s.objects.size()},
                             {"census", s.census}});
    }
    j["census"] = m.report.census;
    j["total"] = m.report.critical.size();
    j["matched_pairs"] = m.matching.size();
    j["valid"] = m.report.valid;
    j["cycle_free"] = m.report.cycle_free;
    j["extension_found"] = m.report.extension_found;
    j["y_counts"] = st.y_counts;
    j["strata"] = strata_list;
    if (toric()) {
      auto tm = strat::face_torus_matching(faces_toric());
      j["torus_census"] = tm.report.census;
    }
    return j;
  }

  Json homology_json() {
    require_cells();
    auto r = nerve(sal().category);
    Json j, tors = Json::array();
    for (const auto& t : r.h.torsion) tors.push_back(strings(t));
    j["betti"] = r.h.betti;
    j["torsion"] = tors;
    j["torsion_free"] = r.h.torsion_free();
    j["truncated"] = r.truncated;
    j["boundary_squares_to_zero"] = r.squares_to_zero;
    if (toric()) {
      auto poly = homology::Polynomial::from_ints(r.h.betti) * homology::one_plus_t_power(norm_.deficiency);
      auto cb = poly.to_ints();
      if (r.truncated) cb.resize(r.h.betti.size());
      j["complement_betti"] = cb;
      auto fr = nerve(faces_toric().category());
      j["face_category_betti"] = fr.h.betti;
    }
    return j;
  }

  Json verify() {
    Json checks;
    if (!cellular()) {
      check(checks, "empty_arrangement_formula", true);
      return {{"checks", checks}, {"passed", true}};
    }
    const int d = dim();
    // Cell counts and Euler characteristic.
    auto fj = faces();
    const int expected_euler = toric() ? 0 : (d % 2 ? -1 : 1);
    check(checks, "euler_characteristic", fj["euler_characteristic"].get<int>() == expected_euler);
    if (!toric() && arr_->central()) {
      auto counts = arr_->size() ? hyper::nbc_counts(arr_->normals()) : std::vector<int>{1};
      check(checks, "zaslavsky",
            static_cast<int>(faces_hyper().chambers().size()) == std::accumulate(counts.begin(), counts.end(), 0));
    }
    if (toric()) {
      auto fr = nerve(faces_toric().category());
      auto b = binomials(d);
      b.resize(fr.h.betti.size());
      check(checks, "face_category_is_torus", fr.h.betti == b && fr.h.torsion_free());
      auto tm = strat::face_torus_matching(faces_toric());
      check(checks, "torus_matching_binomial", tm.report.valid && tm.report.census == binomials(d));
    }
    // Stratification, Y counts and matching.
    auto& st = strata();
    check(checks, "strata_partition_and_isomorphisms", true);
    auto p = poincare_essential().to_ints();
    p.resize(d + 1, 0);
    std::vector<int> y_by_codim(d + 1, 0);
    for (int i = 0; i <= d; ++i) y_by_codim[d - i] = st.y_counts[i];
    if (toric()) {
      auto n = toric::local_nbc_counts(faces_toric());
      n.resize(d + 1, 0);
      check(checks, "y_counts_match_local_nbc", y_by_codim == n, seq(y_by_codim) + " vs " + seq(n));
    } else {
      check(checks, "y_counts_match_brieskorn", y_by_codim == p, seq(y_by_codim) + " vs " + seq(p));
    }
    int chains = strat::verify_local_orders(model(), a0(), st);
    checks["mu_composition_chains"] = chains;
    check(checks, "mu_composition_and_xi", true);
    const auto& m = matching();
    check(checks, "salvetti_matching_valid", m.report.valid && m.report.cycle_free && m.report.extension_found);
    auto census = m.report.census;
    census.resize(d + 1, 0);
    check(checks, "census_equals_poincare", census == p, seq(census) + " vs " + seq(p));
    auto hr = nerve(sal().category);
    check(checks, "boundary_squares_to_zero", hr.squares_to_zero);
    auto betti = hr.h.betti;
    if (!hr.truncated) {
      betti.resize(d + 1, 0);
      check(checks, "betti_equals_poincare", betti == p, seq(betti) + " vs " + seq(p));
      check(checks, "betti_equals_census", betti == census);
    }
    check(checks, "torsion_free", hr.h.torsion_free());
    if (!toric() && arr_->central() && d > 0) {
      const auto& fp = faces_hyper();
      if (fp.size() && fp[0].dim == 0 && arr_->size() > 0) {
        auto sp = hyper::salvetti_poset(fp);
        auto cs = hyper::strata_central(fp, sp, a0().order());
        size_t total = 0;
        for (const auto& c : cs) total += c.cells.size();
        check(checks, "central_strata_partition", total == sp.cells.size());
      }
    }
    if (!opts_.skip_colimit) {
      auto cr = strat::verify_colimit(model(), a0(), sal());
      check(checks, "colimit_face_category", cr.face_objects == model().cell_count());
      check(checks, "colimit_salvetti", cr.sal_objects == sal().category.object_count());
    }
    return {{"checks", checks}, {"passed", true}, {"colimit_skipped", opts_.skip_colimit}};
  }

 private:
  io::InputSpec spec_;
  Options opts_;
  toric::Normalized norm_;
  std::vector<std::string> warnings_;
  std::unique_ptr<hyper::Arrangement> arr_;
  std::unique_ptr<toric::FaceCategory> fc_;
  std::unique_ptr<hyper::FacePoset> fp_;
  std::unique_ptr<strat::FaceModel> model_;
  std::unique_ptr<hyper::OrderedCentral> a0_;
  std::unique_ptr<strat::SalvettiCategory> sal_;
  std::unique_ptr<strat::Stratification> strata_;
  std::unique_ptr<strat::SalvettiMatching> matching_;
};

void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); })) {
    std::string s = "(";
    bool first = true;
    for (const auto& x : j) {
      s += (first ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
      first = false;
    }
    out << prefix << ": " << s << ")\n";
    return;
  }
  if (j.is_array()) {
    int i = 0;
    for (const auto& x : j) flatten(x, prefix + "[" + std::to_string(i++) + "]", out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"layers", "faces",    "nbc",    "poincare", "salvetti",
                                          "matching", "homology", "verify", "report"};
  return c;
}

Json run(const std::string& command, const io::InputSpec& spec, const Options& opts) {
  Analysis a(spec, opts);
  Json out;
  out["command"] = command;
  out["input"] = a.input();
  if (command == "layers") {
    out["layers"] = a.layers();
  } else if (command == "faces") {
    out["faces"] = a.faces();
  } else if (command == "nbc") {
    out["nbc"] = a.nbc();
  } else if (command == "poincare") {
    out["poincare"] = a.poincare_json();
  } else if (command == "salvetti") {
    out["salvetti"] = a.salvetti();
  } else if (command == "matching") {
    out["matching"] = a.matching_json();
  } else if (command == "homology") {
    out["homology"] = a.homology_json();
  } else if (command == "verify") {
    out["verify"] = a.verify();
  } else if (command == "report") {
    out["layers"] = a.layers();
    out["nbc"] = a.nbc();
    out["poincare"] = a.poincare_json();
    out["cell_structure"] = a.cellular();
    if (a.cellular()) {
      out["faces"] = a.faces();
      out["salvetti"] = a.salvetti();
      out["matching"] = a.matching_json();
      out["homology"] = a.homology_json();
    }
    out["verify"] = a.verify();
  } else {
    throw InputError("unknown command '" + command + "'");
  }
  return out;
}

std::string render(const std::string& command, const Json& result) {
  std::ostringstream out;
  if (command == "poincare") {
    out << result["poincare"]["polynomial"].get<std::string>() << "\n";
    return out.str();
  }
  for (const auto& w : result["input"]["warnings"]) out << "warning: " << w.get<std::string>() << "\n";
  Json body = result;
  body.erase("command");
  body.erase("input");
  flatten(body, "", out);
  return out.str();
}

}  // namespace toricmin::report
