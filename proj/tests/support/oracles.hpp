#ifndef DGLA_TESTS_ORACLES_HPP
#define DGLA_TESTS_ORACLES_HPP

#include <algorithm>
#include <set>
#include <vector>

namespace test_oracles {

// Independent count of dim L_n for q ungraded (degree 0) generators: the
// number of aperiodic necklaces of length n over q letters, by brute force
// enumeration. Deliberately avoids the Dynkin projector and the Witt
// formula; this is the oracle the basis computation is checked against.
inline std::size_t aperiodic_necklaces(std::size_t q, std::size_t n) {
  std::vector<std::size_t> word(n, 0);
  std::set<std::vector<std::size_t>> canonical;
  while (true) {
    std::size_t period = n;
    for (std::size_t p = 1; p < n; ++p) {
      if (n % p != 0) continue;
      bool ok = true;
      for (std::size_t i = p; i < n && ok; ++i) ok = word[i] == word[i - p];
      if (ok) {
        period = p;
        break;
      }
    }
    if (period == n) {
      std::vector<std::size_t> best = word;
      std::vector<std::size_t> rot = word;
      for (std::size_t s = 1; s < n; ++s) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
      }
      canonical.insert(best);
    }
    std::size_t i = 0;
    while (i < n && word[i] == q - 1) word[i++] = 0;
    if (i == n) break;
    ++word[i];
  }
  return canonical.size();
}

}  // namespace test_oracles

#endif
