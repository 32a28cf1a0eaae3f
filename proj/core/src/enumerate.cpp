#include "cyclav/enumerate.hpp"

#include "cyclav/error.hpp"
#include "cyclav/parallel.hpp"

namespace cyclav {
namespace {

EnumWindow finish(std::vector<Int> values, Mode mode) {
  EnumWindow w;
  w.mode = mode;
  w.values = std::move(values);
  if (!w.values.empty()) {
    w.min = w.values.front();
    w.max = w.values.back();
    w.M = w.max - w.min;
  }
  return w;
}

void check_shape(unsigned g, std::span<const Int> a_vec) {
  if (g < 1 || g > 2) throw InvalidArgument("enumeration needs g in {1, 2}: no exact membership test for g >= 3");
  if (a_vec.size() + 1 != g) throw InvalidArgument("a_vec must have length g - 1");
}

// Chunks processed per worker task.
constexpr long kChunk = 4096;

}  // namespace

CandidateRange candidate_range(unsigned g, std::span<const Int> a_vec, const FieldSize& field) {
  check_shape(g, a_vec);
  const Int& q = field.q;
  if (g == 1) {
    const Int lim = isqrt(Int(4 * q));
    return {Int(-lim), lim};
  }
  const Int& a = a_vec[0];
  const Int a2 = a * a;
  if (a2 >= 16 * q) return {Int(1), Int(0)};
  // b + 2q > 2|a| sqrt(q)  <=>  b + 2q >= isqrt(4 a^2 q) + 1.
  const Int lo = isqrt(Int(4 * a2 * q)) + 1 - 2 * q;
  // 4b < a^2 + 8q  <=>  b <= floor((a^2 + 8q - 1) / 4).
  Int hi;
  Int num = a2 + 8 * q - 1;
  mpz_fdiv_q_ui(hi.get_mpz_t(), num.get_mpz_t(), 4);
  return {lo, hi};
}

EnumPair enumerate_both(unsigned g, std::span<const Int> a_vec, const FieldSize& field,
                        const EnumOptions& options) {
  const CandidateRange range = candidate_range(g, a_vec, field);
  EnumPair out;
  out.all.mode = out.cyclic.mode = options.mode;
  if (range.lo > range.hi) return out;

  const Int span = range.hi - range.lo + 1;
  if (!span.fits_slong_p()) throw InvalidArgument("enumeration window too large");
  const long total = span.get_si();
  const std::size_t chunks = static_cast<std::size_t>((total + kChunk - 1) / kChunk);
  std::vector<Int> prefix(a_vec.begin(), a_vec.end());

  struct Part {
    std::vector<Int> all;
    std::vector<Int> cyclic;
  };
  auto parts = parallel_map(chunks, options.jobs, [&](std::size_t chunk) {
    Part part;
    const long begin = static_cast<long>(chunk) * kChunk;
    const long end = std::min(total, begin + kChunk);
    std::vector<Int> coeffs = prefix;
    coeffs.emplace_back(0);
    for (long k = begin; k < end; ++k) {
      Int z = range.lo + k;
      coeffs.back() = z;
      IsogenyClass c(g, field, coeffs);
      if (!validate(c, options.mode).valid) continue;
      if (is_cyclic_class(c).cyclic) part.cyclic.push_back(z);
      part.all.push_back(std::move(z));
    }
    return part;
  });

  std::vector<Int> all, cyclic;
  for (auto& part : parts) {
    for (auto& z : part.all) all.push_back(std::move(z));
    for (auto& z : part.cyclic) cyclic.push_back(std::move(z));
  }
  out.all = finish(std::move(all), options.mode);
  out.cyclic = finish(std::move(cyclic), options.mode);
  return out;
}

EnumWindow enumerate_I(unsigned g, std::span<const Int> a_vec, const FieldSize& field,
                       const EnumOptions& options) {
  const CandidateRange range = candidate_range(g, a_vec, field);
  if (range.lo > range.hi) return finish({}, options.mode);
  const Int span = range.hi - range.lo + 1;
  if (!span.fits_slong_p()) throw InvalidArgument("enumeration window too large");
  const long total = span.get_si();
  const std::size_t chunks = static_cast<std::size_t>((total + kChunk - 1) / kChunk);
  std::vector<Int> prefix(a_vec.begin(), a_vec.end());
  auto parts = parallel_map(chunks, options.jobs, [&](std::size_t chunk) {
    std::vector<Int> found;
    const long begin = static_cast<long>(chunk) * kChunk;
    const long end = std::min(total, begin + kChunk);
    std::vector<Int> coeffs = prefix;
    coeffs.emplace_back(0);
    for (long k = begin; k < end; ++k) {
      coeffs.back() = range.lo + k;
      if (validate(IsogenyClass(g, field, coeffs), options.mode).valid) found.push_back(coeffs.back());
    }
    return found;
  });
  std::vector<Int> all;
  for (auto& part : parts) {
    for (auto& z : part) all.push_back(std::move(z));
  }
  return finish(std::move(all), options.mode);
}

EnumWindow enumerate_I_cyclic(unsigned g, std::span<const Int> a_vec, const FieldSize& field,
                              const EnumOptions& options) {
  return enumerate_both(g, a_vec, field, options).cyclic;
}

}  // namespace cyclav
