// Command-line front end: expansion audit, Johnson images of twist lists,
// Casson reports and the psi reproduction.
//
// Exit status: 0 success, 1 mathematical mismatch, 2 usage or input error.

#include "torelli/casson.hpp"
#include "torelli/errors.hpp"
#include "torelli/expansion.hpp"
#include "torelli/johnson.hpp"
#include "torelli/psi_dataset.hpp"
#include "torelli/twist_file.hpp"
#include "torelli/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

using namespace torelli;

namespace {

constexpr int ok = 0;
constexpr int mismatch = 1;
constexpr int usage = 2;

struct Globals
{
	int genus = 2;
	int degree = Tensor::default_trunc;
};

int check_expansion(Globals const &gl)
{
	SymplecticExpansion const exp = default_expansion(gl.genus, gl.degree);
	for (auto const &[k, t] : symplectic_defect(exp))
		std::cout << "defect degree " << k << ": " << to_string(t, gl.genus) << '\n';
	int const through = symplectic_through(exp);
	int const required = std::min(3, gl.degree);
	std::cout << "defect vanishes through degree " << through << " (truncation "
	          << gl.degree << ")\n";
	if (through < required)
	{
		std::cout << "not symplectic through degree " << required << '\n';
		return mismatch;
	}
	std::cout << "symplectic through degree " << required << '\n';
	return ok;
}

int tau(Globals const &gl, int level, std::string const &file, bool unsafe)
{
	if (gl.degree < level + 2)
	{
		std::cerr << "tau" << level << " needs --degree >= " << level + 2 << '\n';
		return usage;
	}
	TwistList const twists = read_twist_file(file, gl.genus);
	SymplecticExpansion const exp = default_expansion(gl.genus, gl.degree);
	Tensor const t2 = tau2(exp, twists);
	if (level == 2)
	{
		std::cout << to_string(t2, gl.genus) << '\n';
		return ok;
	}
	if (!t2.is_zero())
	{
		if (!unsafe)
		{
			std::cout << "tau2 does not vanish, the list is not certified to lie in J3\n"
			          << "tau2: " << to_string(t2, gl.genus) << '\n';
			return mismatch;
		}
		std::cerr << "warning: tau2 does not vanish; printing the L5 sum, which is not "
		             "a Johnson image\n";
	}
	std::cout << to_string(tau3(exp, twists), gl.genus) << '\n';
	return ok;
}

int verify_psi(bool corrupt)
{
	auto const checks = run_psi_checks({.corrupt = corrupt});
	std::cout << format_checks(checks);
	return all_passed(checks) ? ok : mismatch;
}

int casson(Globals const &gl, std::string const &file)
{
	TwistList const twists = read_twist_file(file, gl.genus);
	std::cout << to_string(casson_report(default_expansion(gl.genus, gl.degree), twists));
	return ok;
}

int export_psi(std::string const &path)
{
	std::ofstream out(path);
	if (!out)
	{
		std::cerr << "cannot open " << path << " for writing\n";
		return usage;
	}
	out << format_twist_file(
	    load_psi().twists(),
	    "psi = T_gamma2^-3 psi_1, genus 2\ncoeff genus barcode");
	out.close();
	if (!out)
	{
		std::cerr << "write to " << path << " failed\n";
		return usage;
	}
	return ok;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Johnson homomorphisms and the Casson invariant on the Torelli group"};
	app.require_subcommand(1);
	app.fallthrough();

	Globals gl;
	app.add_option("--genus", gl.genus, "surface genus")
	    ->check(CLI::Range(1, 64))
	    ->capture_default_str();
	app.add_option("--degree", gl.degree, "truncation degree")
	    ->check(CLI::Range(2, 16))
	    ->capture_default_str();

	auto *check = app.add_subcommand("check-expansion",
	                                 "audit the symplectic condition of the default expansion");

	int level = 0;
	std::string tau_file;
	bool unsafe = false;
	auto *tau_cmd = app.add_subcommand("tau", "tau2 or tau3 of a twist file");
	tau_cmd->add_option("--level", level)->required()->check(CLI::IsMember({2, 3}));
	tau_cmd->add_option("--file", tau_file, "twist file")->required();
	tau_cmd->add_flag("--unsafe", unsafe, "print the L5 sum even if tau2 != 0");

	bool corrupt = false;
	auto *verify = app.add_subcommand("verify-psi", "reproduce the psi computation");
	verify->add_flag("--corrupt", corrupt)->group(""); // test mode

	std::string casson_file;
	auto *casson_cmd = app.add_subcommand("casson", "Casson report of a twist file");
	casson_cmd->add_option("--file", casson_file, "twist file")->required();

	std::string out_path;
	auto *export_cmd = app.add_subcommand("export-psi", "write the psi twist list");
	export_cmd->add_option("--out", out_path, "output path")->required();

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::ParseError const &e)
	{
		int const code = app.exit(e);
		return code == 0 ? ok : usage;
	}

	try
	{
		if (*check)
			return check_expansion(gl);
		if (*tau_cmd)
			return tau(gl, level, tau_file, unsafe);
		if (*verify)
			return verify_psi(corrupt);
		if (*casson_cmd)
			return casson(gl, casson_file);
		if (*export_cmd)
			return export_psi(out_path);
	}
	catch (Error const &e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return usage;
	}
	return usage;
}
