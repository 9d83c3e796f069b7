#include "transform.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace epspectra::detail {

namespace {

using PlanKey = std::tuple<int, int, int>;  // dim, points per axis, sign

std::mutex plan_mutex;
std::map<PlanKey, fftw_plan>& plan_cache() {
    static std::map<PlanKey, fftw_plan> cache;
    return cache;
}

// FFTW_UNALIGNED keeps the cached plan valid for arbitrary caller buffers;
// FFTW_ESTIMATE keeps planning deterministic run to run.
fftw_plan get_plan(const PeriodicGrid& g, int sign) {
    const PlanKey key{g.dim(), g.points_per_axis(), sign};
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<int> dims(std::size_t(g.dim()), g.points_per_axis());
    fftw_complex* a = fftw_alloc_complex(g.total_points());
    fftw_complex* b = fftw_alloc_complex(g.total_points());
    fftw_plan plan = fftw_plan_dft(g.dim(), dims.data(), a, b, sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(a);
    fftw_free(b);
    cache.emplace(key, plan);
    return plan;
}

}  // namespace

void dft(const PeriodicGrid& g, const std::complex<double>* in,
         std::complex<double>* out, int sign) {
    fftw_plan plan = get_plan(g, sign);
    fftw_execute_dft(plan,
                     reinterpret_cast<fftw_complex*>(
                         const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

}  // namespace epspectra::detail
