from gradpix.image.png_io import load_png, save_png, image_from_array
from gradpix.image.noise import add_gaussian_noise, noise_directory
from gradpix.image.synthetic import generate_synthetic, generate_directory

__all__ = [
    "load_png",
    "save_png",
    "image_from_array",
    "add_gaussian_noise",
    "noise_directory",
    "generate_synthetic",
    "generate_directory",
]
