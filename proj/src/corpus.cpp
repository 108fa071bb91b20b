#include "bergwords/corpus.hpp"

#include <cmath>

namespace bergwords {

namespace {

bool is_valid(long k, long l, long m, long n) {
  long det = k * n - l * m;
  if (det != 1 && det != -1) return false;
  if (l < 1 || m < 1) return false;
  long trace = k + n;
  long disc = trace * trace - 4 * det;
  if (disc <= 0) return false;
  long root = (long)std::sqrt((double)disc);
  while (root * root > disc) --root;
  while ((root + 1) * (root + 1) <= disc) ++root;
  return root * root != disc;
}

} // namespace

std::vector<AutomorphismMatrix> valid_matrices_up_to_sigma(long sigma_max) {
  std::vector<AutomorphismMatrix> out;
  for (long sigma = 1; sigma <= sigma_max; ++sigma) {
    for (long k = 0; k <= sigma; ++k) {
      for (long l = 0; l + k <= sigma; ++l) {
        for (long m = 0; k + l + m <= sigma; ++m) {
          long n = sigma - k - l - m;
          if (is_valid(k, l, m, n)) out.push_back(validate_matrix(k, l, m, n));
        }
      }
    }
  }
  return out;
}

} // namespace bergwords
