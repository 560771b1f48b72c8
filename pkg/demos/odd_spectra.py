
import numpy as np 
import matplotlib.pyplot as plt

from partialspec.case_studies import derivative, shift
from partialspec.cfunc import closed_form_bounds
from partialspec.scan import ScanConfig, run_scan, render_heatmap



class Graphics:
    """
    Odd spectra demo graphics
    - For producing the plots
    """
    def __init__ (self, n=1001):
        self.n    = n
        self.cols = ['r','b','g']

    def get_ax (self, N, height=4):
        plt.figure( figsize=(np.min( (5*N, 15)), height) )
        axs = [plt.subplot2grid((1,N),(0,i)) for i in range(N)]
        for ax in axs:
            ax.spines['right'].set_visible(False)
            ax.spines['top'].set_visible(False)
        return axs

    def plot_abs_A (self, Ms):
        # |Lambda(h_zeta)| along the imaginary axis
        ax,  = self.get_ax(1)
        tau  = np.linspace(-30., 30., 2001)
        for M, c in zip(Ms, self.cols):
            ax.semilogy(tau, [ max(M.abs_A(1j*t), 1e-17) for t in tau ], c=c)
        ax.set_xlabel('Im zeta')
        ax.set_ylabel('|A(zeta)|')
        ax.legend([ M.name for M in Ms ], loc=3)
        plt.suptitle('Spectral function on the imaginary axis')
        plt.show()

    def plot_envelope (self):
        # Example 2: witness lower bound between the closed-form bounds
        ax,  = self.get_ax(1)
        M    = derivative.Example2()
        zs   = np.linspace(0.25, 8., 32)
        cell = [ M.cell(z, self.n) for z in zs ]
        ax.semilogy(zs, [ c.norm_lower for c in cell ], 'kx')
        ax.semilogy(zs, [ closed_form_bounds(2, z)[0] for z in zs ], c='b')
        ax.semilogy(zs, [ closed_form_bounds(2, z)[1] for z in zs ], c='r')
        ax.set_xlabel('zeta')
        ax.legend(['witness', 'lower bound', 'upper bound'], loc=2)
        plt.suptitle('Resolvent norm of example 2 diverges, spectrum is empty')
        plt.show()

    def plot_shifts (self):
        axs = self.get_ax(2)
        for M, ax in zip(shift.get(), axs):
            scan = run_scan( ScanConfig({'operator': M, 're_range': (-2., 2., 81),
                                         'im_range': (-2., 2., 81), 'grid_n': 257}) )
            ax.imshow(render_heatmap(scan), cmap='gray', vmin=0, vmax=255,
                      extent=[-2, 2, -2, 2])
            ax.set_title(M.name)
        plt.suptitle('Spectral (black), indeterminate (grey), resolved (white)')
        plt.show()


if __name__ == '__main__':
    G = Graphics()
    G.plot_abs_A( derivative.get() )
    G.plot_envelope()
    G.plot_shifts()
