#pragma once

namespace octoclif::detail {

// ADL trampolines so class members named is_zero/conj can reach the free
// ring operations of their (dependent) scalar type.
template <typename T>
bool is_zero_v(const T &v) { return is_zero(v); }

template <typename T>
T conj_v(const T &v) { return conj(v); }

} // namespace octoclif::detail
