#pragma once

#include <stdexcept>
#include <string>

namespace zcu {

// Base class for every failure the library reports deliberately.  Each
// concrete error carries a stable code() string so the CLI can print
// machine-readable diagnostics without parsing the human message.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
    virtual const char* code() const noexcept { return "Error"; }
};

#define ZCU_DEFINE_ERROR(Name)                                                 \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what_arg)                            \
            : Error(std::string(#Name) + ": " + what_arg) {}                  \
        const char* code() const noexcept override { return #Name; }          \
    }

// A multiplication table that fails one of the group axioms; the message
// carries a concrete witness (the offending cell or triple).
ZCU_DEFINE_ERROR(NotAGroup);
// A closure or enumeration grew past the configured cap.
ZCU_DEFINE_ERROR(CapExceeded);
// A quotient or conjugation-invariance requirement was violated.
ZCU_DEFINE_ERROR(NotNormal);
// Subgroups from different parent groups were mixed in one operation.
ZCU_DEFINE_ERROR(ParentMismatch);
// A catalog name or numeric parameter outside the documented domain.
ZCU_DEFINE_ERROR(BadParameter);
// The induced action on a cyclic section was not faithful.
ZCU_DEFINE_ERROR(ActionNotFaithful);
// A computation that needs the full pair family was given a partial one.
ZCU_DEFINE_ERROR(IncompleteFamily);
// The simple-component dimensions failed to add up to the group order.
ZCU_DEFINE_ERROR(DimensionMismatch);
// A subgroup section whose index was expected to be a prime power was not.
ZCU_DEFINE_ERROR(PrimePowerRequired);
// A required real-cyclotomic class number is outside the built-in table.
ZCU_DEFINE_ERROR(UnknownClassNumber);
// A projection was requested for a group-ring element that is not central.
ZCU_DEFINE_ERROR(NotCentral);
// A quotient section was required to be abelian but is not.
ZCU_DEFINE_ERROR(NotAbelian);

// Some call sites name the parameter-domain error in the plural; keep a
// single type so catch-by-type works uniformly.
using BadParameters = BadParameter;

#undef ZCU_DEFINE_ERROR

} // namespace zcu
