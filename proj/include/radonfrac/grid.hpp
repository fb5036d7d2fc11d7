#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace radonfrac {

using cd = std::complex<double>;

struct Grid1D {
	double lo = 0.0;
	double hi = 1.0;
	int count = 2;

	Grid1D() = default;
	Grid1D(double lo_, double hi_, int count_) : lo(lo_), hi(hi_), count(count_)
	{
		if (!(lo < hi) || count < 2)
			throw std::invalid_argument("Grid1D: need lo < hi and count >= 2");
	}
	static Grid1D from_step(double lo, double h, int count)
	{
		return Grid1D(lo, lo + h * (count - 1), count);
	}

	double h() const { return (hi - lo) / (count - 1); }
	double node(int k) const { return lo + k * h(); }
	bool contains(double x) const { return x >= lo && x <= hi; }
	// index of the cell containing x, clamped to [0, count-2]
	int cell(double x) const
	{
		int k = (int)std::floor((x - lo) / h());
		if (k < 0) k = 0;
		if (k > count - 2) k = count - 2;
		return k;
	}
};

struct GridND {
	int n = 1;
	std::vector<Grid1D> axes;

	GridND() = default;
	GridND(std::vector<Grid1D> ax) : n((int)ax.size()), axes(std::move(ax)) {}
	static GridND square(int n, double lo, double hi, int count)
	{
		std::vector<Grid1D> ax(n, Grid1D(lo, hi, count));
		return GridND(std::move(ax));
	}

	std::size_t size() const
	{
		std::size_t s = 1;
		for (auto& a : axes)
			s *= a.count;
		return s;
	}
	// row-major: the last axis is fastest
	void unflatten(std::size_t idx, int* k) const
	{
		for (int a = n - 1; a >= 0; --a) {
			k[a] = (int)(idx % axes[a].count);
			idx /= axes[a].count;
		}
	}
	void node(std::size_t idx, double* x) const
	{
		int k[8];
		unflatten(idx, k);
		for (int a = 0; a < n; ++a)
			x[a] = axes[a].node(k[a]);
	}
	double cell_volume() const
	{
		double v = 1.0;
		for (auto& a : axes)
			v *= a.h();
		return v;
	}
};

struct SampledField {
	GridND grid;
	std::vector<cd> values;

	int dim() const { return grid.n; }
	std::size_t index(const int* k) const
	{
		std::size_t idx = 0;
		for (int a = 0; a < grid.n; ++a)
			idx = idx * grid.axes[a].count + k[a];
		return idx;
	}
};

// cubic (4-point Lagrange) interpolation of uniformly sampled values;
// returns 0 outside the grid
cd interp_cubic(const Grid1D& g, const std::vector<cd>& v, double x);
// linear interpolation; throws outside the grid
cd interp_linear(const Grid1D& g, const std::vector<cd>& v, double x);

} // namespace radonfrac
