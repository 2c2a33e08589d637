#pragma once

// Printed by oracles/two_vertex_oracle.py (mpmath, 50 digits).
namespace oracle {

inline constexpr double kCantorDimension = 0.6309297535714574371;

struct TwoVertex {
  double s, ratio, cond3, y_max, a_pow_s;
};

inline constexpr TwoVertex kExampleA{0.493411827924473651, 0.548664274918222825, 1.00340099175271503,
                                     1.00672464285911378, 0.694932859718601936};
inline constexpr TwoVertex kExampleB{0.799085572294378904, 1.15219415449430859, 1.83523376703103306,
                                     20.533180508028716, 0.554657388653946845};
inline constexpr TwoVertex kExampleC{0.514706992840621001, 0.897894303784159606, 2.08238992300096589,
                                     4.53348726611477081, 0.48990910660728838};

}  // namespace oracle
