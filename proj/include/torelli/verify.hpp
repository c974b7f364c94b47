#pragma once

// End-to-end reproduction of the psi computation: J_3 membership, tau_3
// against its published forms, the bracket decomposition and the Casson
// numbers.

#include "torelli/johnson.hpp"

#include <string>
#include <vector>

namespace torelli {

struct CheckResult
{
	std::string name;
	bool passed;
	std::string detail; ///< difference tensor or value on failure
};

struct VerifyOptions
{
	/// Test mode: alters the exponent of s1 before running.
	bool corrupt = false;
};

/// The twist list used by run_psi_checks (the dataset, possibly corrupted).
TwistList psi_twists(VerifyOptions const &opts);

std::vector<CheckResult> run_psi_checks(VerifyOptions const &opts = {});

/// One line per check, "PASS  name" / "FAIL  name: detail".
std::string format_checks(std::vector<CheckResult> const &checks);

bool all_passed(std::vector<CheckResult> const &checks);

} // namespace torelli
