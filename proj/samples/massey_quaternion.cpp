// Four-fold Massey product <Y, Y^2, Y, Y^2> over the generalized quaternion groups.
#include <iostream>

#include "f2coh/massey.hpp"
#include "f2coh/named_basis.hpp"
#include "f2coh/resolution.hpp"

int main() {
    using namespace f2coh;
    for (int n = 3; n <= 5; ++n) {
        const auto g = make_group(Family::Quaternion, n);
        const NamedCohomology nc(make_complex(quaternion_resolution(g, 10)));
        const std::vector<CohClass> args{nc.generator("Y"), nc.evaluate("Y2"), nc.generator("Y"), nc.evaluate("Y2")};
        const auto vs = massey_value_set(args);
        std::cout << to_string(nc.spec()) << ": <Y,Y2,Y,Y2> = {";
        for (std::size_t i = 0; i < vs.values.size(); ++i) std::cout << (i ? ", " : "") << nc.name(vs.values[i]);
        std::cout << "} from " << vs.systems << " defining systems\n";
    }
}
