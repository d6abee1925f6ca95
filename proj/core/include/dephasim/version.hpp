//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file dephasim/version.hpp
//---------------------------------------------------------------------------//
#pragma once

namespace dephasim {

//! Build identifier embedded in run manifests and printed by --version.
inline constexpr const char* kVersion = "0.1.0";

}  // namespace dephasim
