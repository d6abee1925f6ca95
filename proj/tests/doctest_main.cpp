//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//! \file doctest_main.cpp
//---------------------------------------------------------------------------//
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
