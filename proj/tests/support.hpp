#ifndef SRDEPTH_TESTS_SUPPORT_HPP
#define SRDEPTH_TESTS_SUPPORT_HPP

#include <vector>

#include "oracle.hpp"
#include "srdepth/complex.hpp"
#include "srdepth/field.hpp"

namespace test_support {

/// Oracle face set rebuilt from the facets only, so the library's own closure
/// is not trusted.
inline oracle::FaceSet faces_of(const srdepth::SimplicialComplex& K)
{
    std::vector<oracle::Labels> facets;
    for (srdepth::Face f : K.facets()) facets.push_back(K.labels_of(f));
    return oracle::closure(facets);
}

inline std::vector<srdepth::FieldSpec> all_fields()
{
    return {srdepth::FieldSpec::prime(2), srdepth::FieldSpec::prime(3), srdepth::FieldSpec::prime(5),
            srdepth::FieldSpec::rationals()};
}

inline unsigned oracle_char(const srdepth::FieldSpec& F) { return F.characteristic(); }

inline srdepth::Face face(const srdepth::SimplicialComplex& K, std::vector<int> labels)
{
    return K.face_from_labels(labels);
}

}  // namespace test_support

#endif  // SRDEPTH_TESTS_SUPPORT_HPP
