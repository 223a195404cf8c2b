#include "inputs.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hirano/json_io.hpp"

namespace inputs {

using hirano::Matrix;

int uniform(Engine& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Matrix random_matrix(Engine& rng, std::size_t rows, std::size_t cols, int bound) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

Matrix unimodular(Engine& rng, std::size_t n) {
  Matrix l = Matrix::identity(n), u = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = uniform(rng, -1, 1);
      u(j, i) = uniform(rng, -1, 1);
    }
  return l * u;
}

Matrix similar_triangular(Engine& rng, const std::vector<int>& spectrum, bool upper) {
  const std::size_t n = spectrum.size();
  Matrix core(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    core(i, i) = spectrum[i];
    if (upper)
      for (std::size_t j = i + 1; j < n; ++j) core(i, j) = uniform(rng, -2, 2);
  }
  const Matrix t = unimodular(rng, n);
  return t * core * hirano::inverse(t);
}

Matrix with_spectrum_from(Engine& rng, std::size_t n, const std::vector<int>& pool) {
  std::vector<int> spectrum(n);
  for (auto& s : spectrum) s = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
  return similar_triangular(rng, spectrum, uniform(rng, 0, 3) != 0);
}

Matrix low_rank(Engine& rng, std::size_t n, std::size_t r, int bound) {
  return random_matrix(rng, n, r, bound) * random_matrix(rng, r, n, bound);
}

std::string data_path(const std::string& name) { return std::string(HIRANO_TEST_DATA_DIR) + "/" + name; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Matrix load_matrix(const std::string& name) { return hirano::matrix_from_json(read_text(data_path(name))); }

hirano::BlockInstance load_blocks(const std::string& name) {
  return hirano::blocks_from_json(read_text(data_path(name)));
}

}  // namespace inputs
