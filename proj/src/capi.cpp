#include "addlab/addlab.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "addlab/errors.hpp"
#include "addlab/report.hpp"

namespace {

thread_local std::string g_last_error;

addlab_status fail(addlab_status code, const char* what) {
  g_last_error = what ? what : "unknown error";
  return code;
}

// Runs fn, translating the C++ error idiom into status codes.
template <typename Fn>
addlab_status guarded(Fn&& fn) {
  try {
    fn();
    return ADDLAB_OK;
  } catch (const std::invalid_argument& e) {
    return fail(ADDLAB_ERR_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(ADDLAB_ERR_DOMAIN, e.what());
  } catch (const addlab::resource_error& e) {
    return fail(ADDLAB_ERR_RESOURCE, e.what());
  } catch (const std::exception& e) {
    return fail(ADDLAB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ADDLAB_ERR_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

addlab::OracleConfig to_config(const addlab_oracle_config* cfg) {
  addlab::OracleConfig out;
  if (cfg) {
    out.restarts = cfg->restarts;
    out.max_iterations = cfg->max_iterations;
    out.tolerance = cfg->tolerance;
    out.seed = cfg->seed;
  }
  return out;
}

addlab::ConstructionSpec parse_spec(const char* family, int32_t d, int32_t n) {
  if (!family) throw std::invalid_argument("family must not be null");
  const auto fam = addlab::family_from_name(family);
  if (!fam) throw std::invalid_argument("unknown family: " + std::string(family));
  addlab::ConstructionSpec spec;
  spec.family = *fam;
  spec.d = d;
  spec.n = n;
  return spec;
}

}  // namespace

struct addlab_subspace {
  addlab::ConstructionSpec spec;
  addlab::SubspaceBasis basis;
};

extern "C" {

const char* addlab_version(void) { return "0.1.0"; }

const char* addlab_last_error(void) { return g_last_error.c_str(); }

void addlab_string_free(char* s) { delete[] s; }

void addlab_oracle_config_defaults(addlab_oracle_config* cfg) {
  if (!cfg) return;
  cfg->restarts = 64;
  cfg->max_iterations = 500;
  cfg->tolerance = 1e-10;
  cfg->seed = 0;
}

addlab_status addlab_subspace_create(const char* family, int32_t d, int32_t n,
                                     addlab_subspace** out) {
  if (!out) return fail(ADDLAB_ERR_ARGUMENT, "output handle must not be null");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<addlab_subspace>();
    handle->spec = parse_spec(family, d, n);
    handle->basis = addlab::build_subspace(handle->spec);
    *out = handle.release();
  });
}

void addlab_subspace_free(addlab_subspace* w) { delete w; }

int32_t addlab_subspace_dim(const addlab_subspace* w) { return w ? w->basis.dim() : 0; }

addlab_status addlab_subspace_ambient_dims(const addlab_subspace* w, int32_t* dim_k,
                                           int32_t* dim_e) {
  if (!w || !dim_k || !dim_e) return fail(ADDLAB_ERR_ARGUMENT, "null argument");
  *dim_k = w->basis.ambient_dims[0];
  *dim_e = w->basis.ambient_dims[1];
  return ADDLAB_OK;
}

double addlab_subspace_orthonormality_residual(const addlab_subspace* w) {
  return w ? w->basis.orthonormality_residual() : -1.0;
}

addlab_status addlab_subspace_max_schmidt(const addlab_subspace* w,
                                          const addlab_oracle_config* cfg, double* value) {
  if (!w || !value) return fail(ADDLAB_ERR_ARGUMENT, "null argument");
  return guarded([&] { *value = addlab::max_schmidt_in_subspace(w->basis, to_config(cfg)).value; });
}

addlab_status addlab_construct_json(const addlab_subspace* w, const addlab_oracle_config* cfg,
                                    char** json) {
  if (!w || !json) return fail(ADDLAB_ERR_ARGUMENT, "null argument");
  *json = nullptr;
  return guarded([&] {
    const addlab::OracleConfig config = to_config(cfg);
    const addlab::OracleEstimate est = addlab::max_schmidt_in_subspace(w->basis, config);
    *json = dup_string(addlab::construct_summary_json(w->spec, w->basis, est, config));
    if (!*json) throw std::bad_alloc();
  });
}

addlab_status addlab_verify_json(const char* family, int32_t d, int32_t n, double p, double m,
                                 const addlab_oracle_config* cfg, int32_t* breaks, char** json) {
  if (!json) return fail(ADDLAB_ERR_ARGUMENT, "null argument");
  *json = nullptr;
  return guarded([&] {
    const addlab::ConstructionSpec spec = parse_spec(family, d, n);
    const addlab::WitnessReport rep =
        addlab::witness_report(spec, addlab::RenyiOrder(p), to_config(cfg), m);
    if (breaks) *breaks = rep.analytic.breaks ? 1 : 0;
    *json = dup_string(addlab::witness_report_json(rep));
    if (!*json) throw std::bad_alloc();
  });
}

namespace {

addlab_status scan_impl(const char* family, const double* p_grid, int32_t p_count,
                        const int32_t* d_grid, int32_t d_count, double m, bool as_csv,
                        char** out) {
  if (!out) return fail(ADDLAB_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    if (!p_grid || p_count < 1 || !d_grid || d_count < 1)
      throw std::invalid_argument("scan: empty grid");
    const addlab::ConstructionSpec spec = parse_spec(family, 2, 0);
    const std::vector<double> ps(p_grid, p_grid + p_count);
    std::vector<int> ds(d_grid, d_grid + d_count);
    addlab::ScanExtras extras;
    extras.m = m;
    const addlab::RegionScan scan = addlab::region_scan(spec.family, ps, ds, extras);
    *out = dup_string(as_csv ? addlab::region_scan_csv(scan) : addlab::region_scan_json(scan));
    if (!*out) throw std::bad_alloc();
  });
}

}  // namespace

addlab_status addlab_scan_json(const char* family, const double* p_grid, int32_t p_count,
                               const int32_t* d_grid, int32_t d_count, double m, char** json) {
  return scan_impl(family, p_grid, p_count, d_grid, d_count, m, false, json);
}

addlab_status addlab_scan_csv(const char* family, const double* p_grid, int32_t p_count,
                              const int32_t* d_grid, int32_t d_count, double m, char** csv) {
  return scan_impl(family, p_grid, p_count, d_grid, d_count, m, true, csv);
}

addlab_status addlab_oracle_json(const char* target, int32_t d, int32_t n,
                                 const addlab_oracle_config* cfg, char** json) {
  if (!json) return fail(ADDLAB_ERR_ARGUMENT, "null argument");
  *json = nullptr;
  return guarded([&] {
    if (!target) throw std::invalid_argument("oracle target must not be null");
    const std::string name = target;
    const addlab::OracleConfig config = to_config(cfg);
    addlab::OracleEstimate est;
    if (name == "antisym-sup") {
      est = addlab::max_schmidt_in_subspace(addlab::antisymmetric_basis(d), config);
    } else if (name == "subspace-sup") {
      est = addlab::max_schmidt_in_subspace(addlab::antisym_subspace(d, n), config);
    } else if (name == "md") {
      est = addlab::estimate_Md(d, config);
    } else {
      throw std::invalid_argument("unknown oracle target: " + name);
    }
    *json = dup_string(addlab::oracle_estimate_json(est, config, name));
    if (!*json) throw std::bad_alloc();
  });
}

}  // extern "C"
