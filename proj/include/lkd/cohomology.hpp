#pragma once

#include <map>
#include <string>

#include "lkd/module.hpp"

namespace lkd {

/// Cohomology dimensions on a window; only nonzero cells are stored.
struct CohomologyTable {
    Window window;
    std::map<BiDegree, std::size_t> cells;

    std::size_t at(BiDegree d) const;
    /// Lines "i\tj\tdim" for the nonzero cells, sorted by i then j.
    std::string tsv() const;
    std::string json() const;

    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

/// dim H^i_j from the components at (i-1,j), (i,j), (i+1,j) only.
std::size_t cohomology_dim(const DgModule& m, BiDegree d);
CohomologyTable cohomology_table(const DgModule& m, const Window& w);
/// Component dimensions, in the same format.
CohomologyTable dimension_table(const DgModule& m, const Window& w);
/// Cell (i,j) of the result is t at (i+n, j-k): the table of M[n]<k> from that of M.
CohomologyTable shift_table(const CohomologyTable& t, long n, long k, const Window& w);

/// The induced map on H is an isomorphism on every cell; reports the first cell where it is not.
CheckReport is_quasi_iso(const ChainMap& h, const Window& w);

/// Cone(h)^i = S^{i+1} (+) T^i with d = [[-d_S, 0], [h, d_T]], as a complex over the base field.
DgModule mapping_cone(const ChainMap& h);

/// "q^-1 t^2 + 1": sum of dim q^i t^j ordered by i then j; "0" for an empty table.
std::string hilbert_series(const CohomologyTable& t);

}  // namespace lkd
