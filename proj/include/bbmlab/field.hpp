#pragma once

#include <span>
#include <utility>
#include <vector>

#include "bbmlab/grid.hpp"

namespace bbmlab {

/// Real samples on a Grid1D. Immutable after construction; operations that
/// "modify" a field return a fresh one.
class Field1D {
public:
    Field1D(Grid1DPtr grid, std::vector<double> values)
        : grid_(std::move(grid)), values_(std::move(values)) {
        if (static_cast<int>(values_.size()) != grid_->n()) {
            throw GridMismatch("Field1D value count does not match grid");
        }
    }

    static Field1D zeros(Grid1DPtr grid) {
        std::vector<double> v(static_cast<std::size_t>(grid->n()), 0.0);
        return Field1D(std::move(grid), std::move(v));
    }

    template <class F>
    static Field1D sample(Grid1DPtr grid, F&& f) {
        std::vector<double> v(static_cast<std::size_t>(grid->n()));
        for (int i = 0; i < grid->n(); ++i) v[static_cast<std::size_t>(i)] = f(grid->node(i));
        return Field1D(std::move(grid), std::move(v));
    }

    const Grid1DPtr& grid() const { return grid_; }
    std::span<const double> values() const { return values_; }
    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    int size() const { return grid_->n(); }

private:
    Grid1DPtr grid_;
    std::vector<double> values_;
};

/// Real samples on a Grid2D, stored row-major with x contiguous:
/// value(ix, iy) = values[iy * nx + ix]. Fixed-y slices are contiguous rows.
class Field2D {
public:
    Field2D(Grid2DPtr grid, std::vector<double> values)
        : grid_(std::move(grid)), values_(std::move(values)) {
        if (values_.size() != grid_->size()) {
            throw GridMismatch("Field2D value count does not match grid");
        }
    }

    static Field2D zeros(Grid2DPtr grid) {
        std::vector<double> v(grid->size(), 0.0);
        return Field2D(std::move(grid), std::move(v));
    }

    template <class F>
    static Field2D sample(Grid2DPtr grid, F&& f) {
        std::vector<double> v(grid->size());
        std::size_t idx = 0;
        for (int m = 0; m < grid->ny(); ++m) {
            const double y = grid->y(m);
            for (int i = 0; i < grid->nx(); ++i) v[idx++] = f(grid->x(i), y);
        }
        return Field2D(std::move(grid), std::move(v));
    }

    const Grid2DPtr& grid() const { return grid_; }
    std::span<const double> values() const { return values_; }
    std::span<const double> row(int iy) const {
        if (iy < 0 || iy >= grid_->ny()) throw IndexOutOfRange("y index " + std::to_string(iy));
        return std::span<const double>(values_).subspan(
            static_cast<std::size_t>(iy) * grid_->nx(), static_cast<std::size_t>(grid_->nx()));
    }
    double at(int ix, int iy) const {
        return values_[static_cast<std::size_t>(iy) * grid_->nx() + static_cast<std::size_t>(ix)];
    }

private:
    Grid2DPtr grid_;
    std::vector<double> values_;
};

}  // namespace bbmlab
