#include "tropocat/chain_complex.hpp"

#include "tropocat/error.hpp"

namespace tropocat {

std::size_t ChainComplex::dim(int degree) const {
  if (degree < min_degree || degree > max_degree()) return 0;
  return dims[static_cast<std::size_t>(degree - min_degree)];
}

const SparseRationalMatrix& ChainComplex::boundary(int degree) const {
  if (degree < min_degree || degree > max_degree()) {
    throw Error(ErrorCode::InvalidArgument, "degree outside the complex");
  }
  return boundaries[static_cast<std::size_t>(degree - min_degree)];
}

void ChainComplex::validate() const {
  if (boundaries.size() != dims.size()) {
    throw Error(ErrorCode::InconsistentDims, "one boundary per degree required");
  }
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const std::size_t below = k == 0 ? 0 : dims[k - 1];
    if (boundaries[k].cols() != dims[k] || boundaries[k].rows() != below) {
      throw Error(ErrorCode::InconsistentDims,
                  "boundary in degree " + std::to_string(min_degree + static_cast<int>(k)) +
                      " has the wrong shape");
    }
  }
}

bool ChainComplex::boundary_squares_to_zero() const {
  validate();
  for (std::size_t k = 1; k < dims.size(); ++k) {
    if (!multiply(boundaries[k - 1], boundaries[k]).is_zero()) return false;
  }
  return true;
}

std::vector<std::size_t> ChainComplex::ranks(const Budget& budget) const {
  validate();
  std::vector<std::size_t> out(dims.size(), 0);
  parallel_for(dims.size(), [&](std::size_t k) {
    budget.check("rank");
    out[k] = rank(boundaries[k]);
    budget.check("rank");
  });
  return out;
}

std::vector<HomologyRow> ChainComplex::homology(const Budget& budget) const {
  const auto rk = ranks(budget);
  const auto b = betti(dims, rk);
  std::vector<HomologyRow> rows;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    rows.push_back({min_degree + static_cast<int>(k), dims[k], rk[k], b[k]});
  }
  return rows;
}

std::int64_t ChainComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const int degree = min_degree + static_cast<int>(k);
    chi += (degree % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(dims[k]);
  }
  return chi;
}

std::int64_t euler_characteristic(const std::vector<HomologyRow>& rows) {
  std::int64_t chi = 0;
  for (const auto& r : rows) chi += (r.degree % 2 == 0 ? 1 : -1) * r.betti;
  return chi;
}

}  // namespace tropocat
