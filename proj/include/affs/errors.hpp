#pragma once

#include <stdexcept>
#include <string>

namespace affs {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define AFFS_DEFINE_ERROR(Name)                                         \
    class Name : public Error {                                         \
    public:                                                             \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

AFFS_DEFINE_ERROR(NotAUnit);
AFFS_DEFINE_ERROR(NotMonomialPermutation);
AFFS_DEFINE_ERROR(PeriodMismatch);
AFFS_DEFINE_ERROR(BadIndices);
AFFS_DEFINE_ERROR(SizeMismatch);
AFFS_DEFINE_ERROR(NotNilpotent);
AFFS_DEFINE_ERROR(IdentityFailed);
AFFS_DEFINE_ERROR(BadDivisorIndex);
AFFS_DEFINE_ERROR(NotContained);
AFFS_DEFINE_ERROR(NotInNilradical);
AFFS_DEFINE_ERROR(NotUnimodular);
AFFS_DEFINE_ERROR(NotMaximalParabolic);
AFFS_DEFINE_ERROR(NotALattice);
AFFS_DEFINE_ERROR(InvalidInput);

#undef AFFS_DEFINE_ERROR

}  // namespace affs
